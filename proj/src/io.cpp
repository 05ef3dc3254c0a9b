#include "splinespace/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "splinespace/errors.hpp"
#include "splinespace/matrix.hpp"

namespace splinespace {

namespace {

using nlohmann::json;

Rational coord_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    auto r = rat_parse(v.get<std::string>());
    if (!r) throw ParseError("bad rational literal: " + v.get<std::string>());
    return *r;
  }
  throw ParseError("coordinate must be an integer or a \"p/q\" string");
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

void check_format(const json& j) {
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("format") || !j["format"].is_number_integer() ||
      j["format"].get<int>() != 1)
    throw ParseError("missing or unsupported \"format\" (expected 1)");
}

PartitionInput partition_from_json(const json& j) {
  check_format(j);
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("missing \"vertices\" array");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("missing \"edges\" array");
  PartitionInput in;
  for (const json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2)
      throw ParseError("vertex must be a [x, y] pair");
    in.vertices.emplace_back(coord_from_json(v[0]), coord_from_json(v[1]));
  }
  int n = static_cast<int>(in.vertices.size());
  std::set<std::pair<int, int>> seen;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("edge must be a [i, j] index pair");
    int a = e[0].get<int>();
    int b = e[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("edge index out of range");
    if (!seen.insert(std::minmax(a, b)).second)
      throw ParseError("duplicate edge");
    in.edges.emplace_back(a, b);
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    in.name = j["name"].get<std::string>();
  }
  return in;
}

json partition_json_value(const PartitionInput& in) {
  json j;
  j["format"] = 1;
  if (!in.name.empty()) j["name"] = in.name;
  json verts = json::array();
  for (const Pt& p : in.vertices)
    verts.push_back(json::array({rat_str(p.x), rat_str(p.y)}));
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (auto [a, b] : in.edges) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

PartitionInput parse_partition_json(const std::string& text) {
  return partition_from_json(parse_json(text));
}

std::string partition_to_json(const PartitionInput& in) {
  return partition_json_value(in).dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  if (!f.good() && !f.eof()) throw IoError("cannot read " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f.good()) throw IoError("cannot write " + path);
}

PartitionInput read_partition_file(const std::string& path) {
  return parse_partition_json(read_text_file(path));
}

std::string fingerprint_hex(const PartitionInput& in) {
  std::ostringstream ss;
  for (const Pt& p : in.vertices) ss << rat_str(p.x) << ',' << rat_str(p.y) << ';';
  ss << '|';
  for (auto [a, b] : in.edges) ss << a << ',' << b << ';';
  std::string s = ss.str();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string basis_to_json(const SplineBasis& basis, const PartitionInput& in) {
  json j;
  j["format"] = 1;
  j["fingerprint"] = fingerprint_hex(in);
  j["degree"] = basis.d;
  j["smoothness"] = basis.mu;
  j["route"] = basis.route;
  j["dimension"] = basis.members.size();
  j["partition"] = partition_json_value(in);
  json funcs = json::array();
  int ncoef = poly2_size(basis.d);
  for (const Spline& s : basis.members) {
    json f;
    for (int c = 0; c < static_cast<int>(s.cell_polys.size()); ++c) {
      json coeffs = json::array();
      for (int k = 0; k < ncoef; ++k)
        coeffs.push_back(rat_str(s.cell_polys[c].coeff_at(k)));
      f[std::to_string(c)] = std::move(coeffs);
    }
    funcs.push_back(std::move(f));
  }
  j["functions"] = std::move(funcs);
  return j.dump(2) + "\n";
}

BasisFileData parse_basis_json(const std::string& text) {
  json j = parse_json(text);
  check_format(j);
  for (const char* key :
       {"fingerprint", "degree", "smoothness", "route", "dimension",
        "partition", "functions"})
    if (!j.contains(key))
      throw ParseError(std::string("missing \"") + key + "\"");
  BasisFileData out;
  if (!j["fingerprint"].is_string() || !j["route"].is_string() ||
      !j["degree"].is_number_integer() || !j["smoothness"].is_number_integer() ||
      !j["dimension"].is_number_integer() || !j["functions"].is_array())
    throw ParseError("basis file field has wrong type");
  out.fingerprint = j["fingerprint"].get<std::string>();
  out.degree = j["degree"].get<int>();
  out.smoothness = j["smoothness"].get<int>();
  out.route = j["route"].get<std::string>();
  out.dimension = j["dimension"].get<long>();
  out.partition = partition_from_json(j["partition"]);
  int ncoef = poly2_size(out.degree);
  for (const json& f : j["functions"]) {
    if (!f.is_object()) throw ParseError("basis function must be an object");
    std::vector<std::vector<Rational>> cells;
    for (auto it = f.begin(); it != f.end(); ++it) {
      size_t pos = 0;
      int c = -1;
      try {
        c = std::stoi(it.key(), &pos);
      } catch (const std::exception&) {
        throw ParseError("cell key is not an index: " + it.key());
      }
      if (pos != it.key().size() || c < 0)
        throw ParseError("cell key is not an index: " + it.key());
      if (!it.value().is_array() ||
          static_cast<int>(it.value().size()) != ncoef)
        throw ParseError("coefficient list must have length binom(d+2,2)");
      if (c >= static_cast<int>(cells.size())) cells.resize(c + 1);
      std::vector<Rational>& coeffs = cells[c];
      if (!coeffs.empty()) throw ParseError("duplicate cell key: " + it.key());
      for (const json& v : it.value()) {
        if (!v.is_string()) throw ParseError("coefficients must be strings");
        auto r = rat_parse(v.get<std::string>());
        if (!r)
          throw ParseError("bad coefficient literal: " + v.get<std::string>());
        coeffs.push_back(*r);
      }
    }
    for (const auto& coeffs : cells)
      if (coeffs.empty()) throw ParseError("missing cell key in function");
    out.functions.push_back(std::move(cells));
  }
  return out;
}

BasisFileData read_basis_file(const std::string& path) {
  return parse_basis_json(read_text_file(path));
}

SplineBasis rebuild_basis(const BasisFileData& data) {
  if (data.fingerprint != fingerprint_hex(data.partition))
    throw NotABasis("fingerprint does not match the embedded partition");
  if (data.degree < 0 || data.smoothness < 0 || data.smoothness > data.degree)
    throw DegreeSmoothnessOrder("need 0 <= smoothness <= degree");
  auto part = std::make_shared<Partition>(
      Partition::build(data.partition.vertices, data.partition.edges));
  if (static_cast<long>(data.functions.size()) != data.dimension)
    throw NotABasis("function count does not match recorded dimension");
  SplineBasis basis;
  basis.part = part;
  basis.d = data.degree;
  basis.mu = data.smoothness;
  basis.route = data.route;
  for (const auto& cells : data.functions) {
    if (cells.size() != part->cells().size())
      throw NotABasis("function does not cover every cell");
    Spline s;
    s.part = part;
    s.d = data.degree;
    for (const auto& coeffs : cells) {
      Poly2 p(data.degree);
      for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
        p.set_coeff_at(k, coeffs[k]);
      s.cell_polys.push_back(std::move(p));
    }
    basis.members.push_back(std::move(s));
  }
  return basis;
}

void verify_basis(const SplineBasis& basis) {
  for (const Spline& s : basis.members)
    if (!check_spline(s, basis.mu))
      throw NotASolution("member is not C^mu across an interior edge");
  int ncoef = poly2_size(basis.d);
  int ncells = static_cast<int>(basis.part->cells().size());
  RatMatrix stacked(0, ncells * ncoef);
  for (const Spline& s : basis.members) {
    std::vector<Rational> row(ncells * ncoef);
    for (int c = 0; c < ncells; ++c)
      for (int k = 0; k < ncoef; ++k)
        row[c * ncoef + k] = s.cell_polys[c].coeff_at(k);
    stacked.append_row(std::move(row));
  }
  if (stacked.rank() != static_cast<int>(basis.members.size()))
    throw NotABasis("members are linearly dependent");
  if (static_cast<long>(basis.members.size()) !=
      dimension_oracle(*basis.part, basis.d, basis.mu))
    throw NotABasis("member count does not match the space dimension");
}

}  // namespace splinespace
