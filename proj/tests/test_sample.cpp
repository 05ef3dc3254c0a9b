#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "splinespace/eee.hpp"
#include "splinespace/errors.hpp"
#include "splinespace/sample.hpp"

using namespace splinespace;
using namespace sstest;

TEST_CASE("parallel sampling matches the serial reference exactly") {
  Partition ms = load_fixture("morgan_scott_symmetric.json");
  SplineBasis basis = run_pipeline(ms, 2, 1);
  REQUIRE(basis.members.size() == 7);

  for (std::size_t idx : {std::size_t{0}, std::size_t{6}}) {
    const Spline& s = basis.members[idx];
    for (int n : {2, 7, 33}) {
      CAPTURE(idx);
      CAPTURE(n);
      auto serial = sample_grid_serial(s, n);
      auto parallel = sample_grid(s, n);
      REQUIRE(serial.size() == parallel.size());
      for (std::size_t k = 0; k < serial.size(); ++k) {
        CHECK(serial[k] == parallel[k]);
      }
      CHECK(sample_csv(serial) == sample_csv(parallel));
    }
  }
}

TEST_CASE("lattice covers the domain and skips outside points") {
  Partition ms = load_fixture("morgan_scott_symmetric.json");
  SplineBasis basis = run_pipeline(ms, 2, 1);
  const Spline& one = basis.members[0];  // constant 1

  auto rows = sample_grid_serial(one, 13);
  CHECK(!rows.empty());
  // The triangle occupies about half its bounding box; corners are outside.
  CHECK(rows.size() < std::size_t{13 * 13});
  for (const auto& r : rows) CHECK(r.value == Rational(1));

  CHECK_THROWS_AS(sample_grid_serial(one, 1), InvalidInput);
  CHECK_THROWS_AS(sample_grid(one, 0), InvalidInput);
}

TEST_CASE("csv output shape") {
  Partition tri = load_fixture("triangle.json");
  SplineBasis basis = run_pipeline(tri, 1, 0);
  const Spline& s = basis.members[1];  // x

  auto rows = sample_grid_serial(s, 3);
  std::string csv = sample_csv(rows);
  CHECK(csv.rfind("x,y,value\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == rows.size() + 1);
  // Each data line has exactly two commas.
  std::size_t pos = csv.find('\n') + 1;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    std::string line = csv.substr(pos, end - pos);
    CHECK(std::count(line.begin(), line.end(), ',') == 2);
    pos = end + 1;
  }
}

TEST_CASE("svg renders a well-formed heatmap") {
  Partition ms = load_fixture("morgan_scott_symmetric.json");
  SplineBasis basis = run_pipeline(ms, 2, 1);
  const Spline& s = basis.members[6];

  std::string svg = render_svg(s, 48);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<rect ") != std::string::npos);
  // One outline polygon per cell.
  std::size_t polys = 0;
  for (std::size_t p = svg.find("<polygon"); p != std::string::npos;
       p = svg.find("<polygon", p + 1)) {
    ++polys;
  }
  CHECK(polys == ms.cells().size());
  CHECK_THROWS_AS(render_svg(s, 1), InvalidInput);

  // Deterministic output.
  CHECK(render_svg(s, 48) == svg);
}
