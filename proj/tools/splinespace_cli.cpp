// Command-line front end: dimensions, basis construction, partition
// extension, evaluation, sampling, rendering, and the 1D knot tools.
// Exact rational arithmetic throughout; floating point only in CSV/SVG
// rendering.  Exit codes are the ErrorCode values documented in the README.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splinespace/conformality.hpp"
#include "splinespace/dimension.hpp"
#include "splinespace/eee.hpp"
#include "splinespace/errors.hpp"
#include "splinespace/extend.hpp"
#include "splinespace/io.hpp"
#include "splinespace/sample.hpp"
#include "splinespace/spline1d.hpp"

using namespace splinespace;
using nlohmann::json;

namespace {

Rational parse_rational(const std::string& text) {
  auto r = rat_parse(text);
  if (!r) throw ParseError("not a rational number: '" + text + "'");
  return *r;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = comma == std::string::npos ? text.substr(pos)
                                                  : text.substr(pos, comma - pos);
    // Trim surrounding spaces.
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(parse_rational(item.substr(b, e - b + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Pt parse_point(const std::string& text) {
  auto parts = parse_rational_list(text);
  if (parts.size() != 2) throw ParseError("expected a point 'x,y': '" + text + "'");
  return Pt{parts[0], parts[1]};
}

Partition build_partition(const PartitionInput& in) {
  return Partition::build(in.vertices, in.edges);
}

SplineBasis load_basis(const std::string& path) {
  return rebuild_basis(read_basis_file(path));
}

const char* class_name(PartitionClass c) {
  switch (c) {
    case PartitionClass::CrossCutPartition:
      return "cross-cut";
    case PartitionClass::QuasiCrossCutPartition:
      return "quasi-cross-cut";
    default:
      return "general";
  }
}

ExtendStrategy strategy_from(const std::string& s) {
  return s == "crosscut" ? ExtendStrategy::CrossCut : ExtendStrategy::Qcc;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(out, text);
  }
}

// ---------------------------------------------------------------- dim ----

int cmd_dim(const std::string& file, int d, int mu, const std::string& method,
            const std::string& strategy, const std::string& format) {
  Partition p = build_partition(read_partition_file(file));
  PartitionClass cls = classify_segments(p).second;

  const bool all = method == "all";
  std::optional<long> formula, oracle, eee;

  if (method == "formula" || all) {
    if (cls == PartitionClass::CrossCutPartition) {
      formula = dim_cross_cut(p, d, mu);
    } else if (cls == PartitionClass::QuasiCrossCutPartition) {
      formula = dim_quasi_cross_cut(p, d, mu);
    } else if (!all) {
      throw NotQuasiCrossCut(
          "closed formulas need a cross-cut or quasi-cross-cut partition");
    }
  }
  if (method == "oracle" || all) oracle = dimension_oracle(p, d, mu);
  if (method == "eee" || all) eee = dimension_via_eee(p, d, mu, strategy_from(strategy));

  bool consistent = true;
  std::optional<long> ref;
  for (const auto& v : {formula, oracle, eee}) {
    if (!v) continue;
    if (!ref) ref = v;
    if (*v != *ref) consistent = false;
  }

  if (format == "json") {
    json j;
    j["degree"] = d;
    j["smoothness"] = mu;
    j["class"] = class_name(cls);
    if (method == "formula" || all) j["formula"] = formula ? json(*formula) : json(nullptr);
    if (method == "oracle" || all) j["oracle"] = *oracle;
    if (method == "eee" || all) j["eee"] = *eee;
    if (all) j["consistent"] = consistent;
    std::printf("%s\n", j.dump(2).c_str());
  } else if (all) {
    std::printf("class: %s\n", class_name(cls));
    std::printf("formula: %s\n", formula ? std::to_string(*formula).c_str() : "n/a");
    std::printf("oracle: %ld\n", *oracle);
    std::printf("eee: %ld\n", *eee);
    std::printf("agreement: %s\n", consistent ? "yes" : "NO");
  } else {
    std::printf("%ld\n", formula ? *formula : oracle ? *oracle : *eee);
  }

  if (!consistent) {
    std::fprintf(stderr, "error: independent dimension computations disagree\n");
    return static_cast<int>(ErrorCode::Disagreement);
  }
  return 0;
}

// -------------------------------------------------------------- basis ----

int cmd_basis(const std::string& file, int d, int mu, const std::string& strategy,
              const std::string& out, const std::string& format) {
  PartitionInput in = read_partition_file(file);
  Partition p = build_partition(in);
  SplineBasis basis = run_pipeline(p, d, mu, strategy_from(strategy));
  write_text_file(out, basis_to_json(basis, in));
  if (format == "json") {
    json j;
    j["dimension"] = basis.members.size();
    j["route"] = basis.route;
    j["out"] = out;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("dimension: %zu\nroute: %s\nwrote %s\n", basis.members.size(),
                basis.route.c_str(), out.c_str());
  }
  return 0;
}

// ------------------------------------------------------------- extend ----

int cmd_extend(const std::string& file, const std::string& strategy,
               const std::string& out, const std::string& format) {
  PartitionInput in = read_partition_file(file);
  Partition p = build_partition(in);
  ExtendedPartition ep = extend_partition(p, strategy_from(strategy));

  std::vector<std::pair<Pt, Pt>> added;
  for (int e : ep.added_subedges) {
    const auto& er = ep.extended.edges()[static_cast<std::size_t>(e)];
    added.emplace_back(ep.extended.vertices()[static_cast<std::size_t>(er.a)],
                       ep.extended.vertices()[static_cast<std::size_t>(er.b)]);
  }

  if (!out.empty()) {
    PartitionInput ext_in;
    ext_in.name = in.name;
    ext_in.vertices = ep.extended.vertices();
    for (const auto& er : ep.extended.edges()) ext_in.edges.emplace_back(er.a, er.b);
    write_text_file(out, partition_to_json(ext_in));
  }

  if (format == "json") {
    json j;
    j["operations"] = ep.s;
    json list = json::array();
    for (const auto& [u, v] : added) {
      list.push_back(json::array({json::array({rat_str(u.x), rat_str(u.y)}),
                                  json::array({rat_str(v.x), rat_str(v.y)})}));
    }
    j["added_subedges"] = list;
    if (!out.empty()) j["out"] = out;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("operations: %d\nadded sub-edges: %zu\n", ep.s, added.size());
    for (const auto& [u, v] : added) {
      std::printf("  (%s, %s) -- (%s, %s)\n", rat_str(u.x).c_str(), rat_str(u.y).c_str(),
                  rat_str(v.x).c_str(), rat_str(v.y).c_str());
    }
    if (!out.empty()) std::printf("wrote %s\n", out.c_str());
  }
  return 0;
}

// --------------------------------------------------- eval/sample/svg -----

int cmd_eval(const std::string& file, int index, const std::string& at,
             const std::string& format) {
  SplineBasis basis = load_basis(file);
  if (index < 0 || index >= static_cast<int>(basis.members.size())) {
    throw IndexOutOfRange("function index out of range");
  }
  Pt p = parse_point(at);
  Rational v = eval_spline(basis.members[static_cast<std::size_t>(index)], p);
  if (format == "json") {
    json j;
    j["value"] = rat_str(v);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s\n", rat_str(v).c_str());
  }
  return 0;
}

int cmd_sample(const std::string& file, int index, int grid, const std::string& out) {
  SplineBasis basis = load_basis(file);
  if (index < 0 || index >= static_cast<int>(basis.members.size())) {
    throw IndexOutOfRange("function index out of range");
  }
  auto rows = sample_grid(basis.members[static_cast<std::size_t>(index)], grid);
  emit(out, sample_csv(rows));
  return 0;
}

int cmd_svg(const std::string& file, int index, int grid, const std::string& out) {
  SplineBasis basis = load_basis(file);
  if (index < 0 || index >= static_cast<int>(basis.members.size())) {
    throw IndexOutOfRange("function index out of range");
  }
  emit(out, render_svg(basis.members[static_cast<std::size_t>(index)], grid));
  return 0;
}

// -------------------------------------------------------------- check ----

int cmd_check(const std::string& file, const std::string& format) {
  SplineBasis basis = load_basis(file);
  verify_basis(basis);
  if (format == "json") {
    json j;
    j["ok"] = true;
    j["dimension"] = basis.members.size();
    j["route"] = basis.route;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("ok: %zu functions verified (degree %d, smoothness %d, route %s)\n",
                basis.members.size(), basis.d, basis.mu, basis.route.c_str());
  }
  return 0;
}

// ----------------------------------------------------------------- d1 ----

int cmd_d1_basis(int d, int mu, const std::string& a, const std::string& b,
                 const std::string& interior, const std::string& insert,
                 const std::string& format) {
  Rational ra = parse_rational(a), rb = parse_rational(b);
  std::vector<Rational> coarse_bp = parse_rational_list(interior);
  std::vector<Rational> fine_bp = coarse_bp;
  for (const Rational& u : parse_rational_list(insert)) fine_bp.push_back(u);

  KnotVector coarse(d, mu, ra, rb, coarse_bp);
  KnotVector fine(d, mu, ra, rb, fine_bp);
  auto vectors = coarse_basis_1d(fine, coarse);

  if (format == "json") {
    json j;
    j["fine_dimension"] = fine.dimension();
    j["coarse_dimension"] = coarse.dimension();
    json vs = json::array();
    for (const auto& v : vectors) {
      json row = json::array();
      for (const Rational& c : v) row.push_back(rat_str(c));
      vs.push_back(row);
    }
    j["vectors"] = vs;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("fine dimension: %d\ncoarse dimension: %d\n", fine.dimension(),
                coarse.dimension());
    for (const auto& v : vectors) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::printf("%s%s", i ? " " : "", rat_str(v[i]).c_str());
      }
      std::printf("\n");
    }
  }
  return 0;
}

int cmd_d1_eval(int d, int mu, const std::string& a, const std::string& b,
                const std::string& interior, int index, const std::string& at, int r,
                const std::string& side, const std::string& format) {
  KnotVector kv(d, mu, parse_rational(a), parse_rational(b),
                parse_rational_list(interior));
  Side s = side == "left" ? Side::Left : Side::Right;
  Rational v = bspline_eval(kv, index, parse_rational(at), r, s);
  if (format == "json") {
    json j;
    j["value"] = rat_str(v);
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s\n", rat_str(v).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bases and dimensions of smooth piecewise-polynomial spaces "
               "over polygonal partitions"};
  app.require_subcommand(1);

  std::string file, out, at, method = "all", strategy = "qcc", format = "text";
  std::string side = "right", interior, insert, ia = "0", ib = "1";
  int d = 0, mu = 0, index = 0, grid = 0, deriv = 0;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* dim = app.add_subcommand("dim", "Dimension of S_d^mu over a partition");
  dim->add_option("file", file, "Partition file")->required();
  dim->add_option("--degree,-d", d, "Polynomial degree d")->required();
  dim->add_option("--smoothness,-m", mu, "Smoothness order mu")->required();
  dim->add_option("--method", method, "Computation route")
      ->check(CLI::IsMember({"formula", "oracle", "eee", "all"}));
  dim->add_option("--strategy", strategy, "Extension strategy for the eee route")
      ->check(CLI::IsMember({"qcc", "crosscut"}));
  add_format(dim);

  CLI::App* basis = app.add_subcommand("basis", "Construct a basis and write it out");
  basis->add_option("file", file, "Partition file")->required();
  basis->add_option("--degree,-d", d, "Polynomial degree d")->required();
  basis->add_option("--smoothness,-m", mu, "Smoothness order mu")->required();
  basis->add_option("--strategy", strategy, "Extension strategy")
      ->check(CLI::IsMember({"qcc", "crosscut"}));
  basis->add_option("--out,-o", out, "Basis file to write")->required();
  add_format(basis);

  CLI::App* extend = app.add_subcommand("extend", "Extend a partition");
  extend->add_option("file", file, "Partition file")->required();
  extend->add_option("--strategy", strategy, "Target class")
      ->check(CLI::IsMember({"qcc", "crosscut"}));
  extend->add_option("--out,-o", out, "Extended partition file to write");
  add_format(extend);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a basis function exactly");
  eval->add_option("file", file, "Basis file")->required();
  eval->add_option("--index,-i", index, "Function index")->required();
  eval->add_option("--at", at, "Evaluation point 'x,y' (rationals)")->required();
  add_format(eval);

  CLI::App* sample = app.add_subcommand("sample", "Sample a basis function to CSV");
  sample->add_option("file", file, "Basis file")->required();
  sample->add_option("--index,-i", index, "Function index")->required();
  grid = 32;
  sample->add_option("--grid,-g", grid, "Lattice points per side");
  sample->add_option("--out,-o", out, "CSV file (stdout when omitted)");

  CLI::App* svg = app.add_subcommand("svg", "Render a basis function heatmap");
  svg->add_option("file", file, "Basis file")->required();
  svg->add_option("--index,-i", index, "Function index")->required();
  int svg_grid = 256;
  svg->add_option("--grid,-g", svg_grid, "Pixels per side");
  svg->add_option("--out,-o", out, "SVG file (stdout when omitted)");

  CLI::App* check = app.add_subcommand("check", "Re-verify a basis file");
  check->add_option("file", file, "Basis file")->required();
  add_format(check);

  CLI::App* d1 = app.add_subcommand("d1", "One-dimensional knot tools");
  d1->require_subcommand(1);

  CLI::App* d1b = d1->add_subcommand("basis", "Coarse basis inside a refined space");
  d1b->add_option("--degree,-d", d, "Degree")->required();
  d1b->add_option("--smoothness,-m", mu, "Smoothness")->required();
  d1b->add_option("--a", ia, "Interval start (rational)");
  d1b->add_option("--b", ib, "Interval end (rational)");
  d1b->add_option("--interior", interior, "Coarse interior breakpoints 'p/q,...'");
  d1b->add_option("--insert", insert, "Breakpoints added in the fine space")->required();
  add_format(d1b);

  CLI::App* d1e = d1->add_subcommand("eval", "Evaluate one B-spline exactly");
  d1e->add_option("--degree,-d", d, "Degree")->required();
  d1e->add_option("--smoothness,-m", mu, "Smoothness")->required();
  d1e->add_option("--a", ia, "Interval start (rational)");
  d1e->add_option("--b", ib, "Interval end (rational)");
  d1e->add_option("--interior", interior, "Interior breakpoints 'p/q,...'");
  d1e->add_option("--index,-i", index, "Basis index")->required();
  d1e->add_option("--at", at, "Evaluation point (rational)")->required();
  d1e->add_option("--derivative,-r", deriv, "Derivative order");
  d1e->add_option("--side", side, "One-sided limit at knots")
      ->check(CLI::IsMember({"left", "right"}));
  add_format(d1e);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorCode::Usage);
  }

  try {
    if (dim->parsed()) return cmd_dim(file, d, mu, method, strategy, format);
    if (basis->parsed()) return cmd_basis(file, d, mu, strategy, out, format);
    if (extend->parsed()) return cmd_extend(file, strategy, out, format);
    if (eval->parsed()) return cmd_eval(file, index, at, format);
    if (sample->parsed()) return cmd_sample(file, index, grid, out);
    if (svg->parsed()) return cmd_svg(file, index, svg_grid, out);
    if (check->parsed()) return cmd_check(file, format);
    if (d1->parsed()) {
      if (d1b->parsed()) return cmd_d1_basis(d, mu, ia, ib, interior, insert, format);
      if (d1e->parsed()) {
        return cmd_d1_eval(d, mu, ia, ib, interior, index, at, deriv, side, format);
      }
    }
    return static_cast<int>(ErrorCode::Usage);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return static_cast<int>(ErrorCode::Internal);
  }
}
