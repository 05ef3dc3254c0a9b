#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "helpers.hpp"
#include "splinespace/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "splinespace-cli-test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Run the CLI with `args`, capturing stdout; stderr is routed aside so
// expected error messages don't pollute the test log.
RunResult run(const std::string& args) {
  fs::path out = work_dir() / "stdout.txt";
  std::string cmd = std::string(CLI_BIN) + " " + args + " > " + out.string() +
                    " 2> " + (work_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  return RunResult{code, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string fx(const char* name) { return sstest::fixture_path(name); }

}  // namespace

TEST_CASE("dim reports the Morgan-Scott dichotomy") {
  RunResult sym = run("dim " + fx("morgan_scott_symmetric.json") +
                      " --degree 2 --smoothness 1 --method oracle");
  CHECK(sym.exit_code == 0);
  CHECK(sym.out == "7\n");

  RunResult gen = run("dim " + fx("morgan_scott_generic.json") +
                      " --degree 2 --smoothness 1 --method eee");
  CHECK(gen.exit_code == 0);
  CHECK(gen.out == "6\n");
}

TEST_CASE("dim --method all emits consistent json") {
  RunResult r = run("dim " + fx("square_cross.json") +
                    " -d 2 -m 1 --method all --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["class"] == "cross-cut");
  CHECK(j["formula"] == 8);
  CHECK(j["oracle"] == 8);
  CHECK(j["eee"] == 8);
  CHECK(j["consistent"] == true);

  // On a general partition the formula has no claim to make.
  RunResult g = run("dim " + fx("morgan_scott_symmetric.json") +
                    " -d 2 -m 1 --method all --format json");
  REQUIRE(g.exit_code == 0);
  json jg = json::parse(g.out);
  CHECK(jg["class"] == "general");
  CHECK(jg["formula"].is_null());
  CHECK(jg["oracle"] == 7);
  CHECK(jg["eee"] == 7);
}

TEST_CASE("exit codes map failure classes") {
  CHECK(run("dim " + (work_dir() / "missing.json").string() + " -d 2 -m 1").exit_code == 6);

  fs::path bad = work_dir() / "bad.json";
  std::ofstream(bad) << "this is not json";
  CHECK(run("dim " + bad.string() + " -d 2 -m 1").exit_code == 2);

  // Closed formula demanded on a partition outside its class.
  CHECK(run("dim " + fx("morgan_scott_symmetric.json") +
            " -d 2 -m 1 --method formula").exit_code == 3);

  // Smoothness above degree.
  CHECK(run("dim " + fx("triangle.json") + " -d 2 -m 5").exit_code == 9);

  // Usage errors: no subcommand, unknown flag.
  CHECK(run("").exit_code == 7);
  CHECK(run("dim " + fx("triangle.json") + " --nonsense 3").exit_code == 7);

  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("basis files are deterministic and survive the full loop") {
  fs::path b1 = work_dir() / "b1.json";
  fs::path b2 = work_dir() / "b2.json";
  REQUIRE(run("basis " + fx("morgan_scott_symmetric.json") + " -d 2 -m 1 --out " +
              b1.string()).exit_code == 0);
  REQUIRE(run("basis " + fx("morgan_scott_symmetric.json") + " -d 2 -m 1 --out " +
              b2.string()).exit_code == 0);
  CHECK(slurp(b1) == slurp(b2));

  CHECK(run("check " + b1.string()).exit_code == 0);

  RunResult ev = run("eval " + b1.string() + " --index 0 --at 1/7,1/9 --format json");
  REQUIRE(ev.exit_code == 0);
  json j = json::parse(ev.out);
  // Cross-check the printed value against the library.
  splinespace::SplineBasis basis =
      splinespace::rebuild_basis(splinespace::read_basis_file(b1.string()));
  splinespace::Rational expect = splinespace::eval_spline(
      basis.members[0], splinespace::Pt(splinespace::Rational(1, 7),
                                        splinespace::Rational(1, 9)));
  CHECK(j["value"] == splinespace::rat_str(expect));

  // Outside the domain.
  CHECK(run("eval " + b1.string() + " --index 0 --at 1000,1000").exit_code == 9);
  // Index out of range.
  CHECK(run("eval " + b1.string() + " --index 99 --at 0,0").exit_code == 9);
}

TEST_CASE("check rejects a tampered basis file") {
  fs::path b = work_dir() / "tamper.json";
  REQUIRE(run("basis " + fx("square_diag.json") + " -d 3 -m 1 --out " +
              b.string()).exit_code == 0);
  std::string text = slurp(b);

  // Repoint the file at a different partition: fingerprint must catch it.
  json j = json::parse(text);
  j["fingerprint"] = std::string(16, '0');
  std::ofstream(b) << j.dump(2) << "\n";
  CHECK(run("check " + b.string()).exit_code == 10);
}

TEST_CASE("extend emits a loadable partition that the formula accepts") {
  fs::path ext = work_dir() / "ext.json";
  RunResult r = run("extend " + fx("zigzag.json") + " --strategy crosscut --out " +
                    ext.string() + " --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["operations"].get<int>() > 0);
  CHECK(j["added_subedges"].size() > 0);

  RunResult d = run("dim " + ext.string() + " -d 2 -m 1 --method all --format json");
  REQUIRE(d.exit_code == 0);
  json jd = json::parse(d.out);
  CHECK(jd["class"] == "cross-cut");
  CHECK(jd["consistent"] == true);

  // qcc extension of the symmetric Morgan-Scott partition: dimension 9.
  RunResult q = run("extend " + fx("morgan_scott_symmetric.json") + " --out " +
                    ext.string());
  REQUIRE(q.exit_code == 0);
  RunResult dq = run("dim " + ext.string() + " -d 2 -m 1 --method oracle");
  CHECK(dq.out == "9\n");
}

TEST_CASE("sample and svg write well-formed output") {
  fs::path b = work_dir() / "sfx.json";
  REQUIRE(run("basis " + fx("triangle.json") + " -d 1 -m 0 --out " +
              b.string()).exit_code == 0);

  RunResult csv = run("sample " + b.string() + " --index 0 --grid 4");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.rfind("x,y,value\n", 0) == 0);

  fs::path svg = work_dir() / "f.svg";
  REQUIRE(run("svg " + b.string() + " --index 0 --grid 32 --out " +
              svg.string()).exit_code == 0);
  std::string body = slurp(svg);
  CHECK(body.rfind("<svg", 0) == 0);
  CHECK(body.find("</svg>") != std::string::npos);
}

TEST_CASE("d1 subcommands expose the 1D tools") {
  // Degree 2, one interior knot at 1/2: middle functions take value 1/2 there.
  RunResult e = run("d1 eval -d 2 -m 1 --interior 1/2 --index 1 --at 1/2");
  REQUIRE(e.exit_code == 0);
  CHECK(e.out == "1/2\n");

  RunResult el = run("d1 eval -d 2 -m 1 --interior 1/2 --index 2 --at 1/2 --side left");
  REQUIRE(el.exit_code == 0);
  CHECK(el.out == "1/2\n");

  RunResult b = run("d1 basis -d 2 -m 1 --interior 1/2 --insert 1/4,3/4 --format json");
  REQUIRE(b.exit_code == 0);
  json j = json::parse(b.out);
  CHECK(j["fine_dimension"] == 6);
  CHECK(j["coarse_dimension"] == 4);
  CHECK(j["vectors"].size() == 4);
  for (const auto& v : j["vectors"]) CHECK(v.size() == 6);

  // Evaluation outside the interval.
  CHECK(run("d1 eval -d 2 -m 1 --interior 1/2 --index 1 --at 3").exit_code == 9);
}
