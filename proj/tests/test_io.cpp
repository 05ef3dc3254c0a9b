#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "splinespace/eee.hpp"
#include "splinespace/errors.hpp"
#include "splinespace/io.hpp"

using namespace splinespace;
using namespace sstest;

TEST_CASE("partition file round-trip is byte identical") {
  for (const char* name : {"morgan_scott_symmetric", "triangle", "square_cross",
                           "square_diag", "zigzag"}) {
    std::string text = read_text_file(fixture_path(std::string(name) + ".json"));
    PartitionInput in = parse_partition_json(text);
    std::string emitted = partition_to_json(in);
    // Canonical emission is a fixed point: parse(emit(x)) emits the same bytes.
    CHECK(partition_to_json(parse_partition_json(emitted)) == emitted);
    // And the fixtures themselves are stored in canonical form.
    CHECK(emitted == text);
  }
}

TEST_CASE("fingerprint reacts to any content change") {
  PartitionInput in = parse_partition_json(read_text_file(fixture_path("triangle.json")));
  std::string base = fingerprint_hex(in);
  CHECK(base.size() == 16);

  PartitionInput moved = in;
  moved.vertices[0].x += Rational(1, 1000000);
  CHECK(fingerprint_hex(moved) != base);

  PartitionInput reordered = in;
  std::swap(reordered.edges[0], reordered.edges[1]);
  CHECK(fingerprint_hex(reordered) != base);

  PartitionInput renamed = in;
  renamed.name = "something-else";
  // The name is a label, not content.
  CHECK(fingerprint_hex(renamed) == base);
}

TEST_CASE("strict parsing rejects malformed partition files") {
  CHECK_THROWS_AS(parse_partition_json("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_partition_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_partition_json(R"({"vertices": [], "edges": []})"), ParseError);
  // Float coordinates are refused: exactness is the point.
  CHECK_THROWS_AS(parse_partition_json(
                      R"({"vertices": [[0.5, 0], [1, 0], [0, 1]],
                          "edges": [[0,1],[1,2],[2,0]]})"),
                  ParseError);
  // Edge indices out of range.
  CHECK_THROWS_AS(parse_partition_json(
                      R"({"vertices": [["0","0"], ["1","0"], ["0","1"]],
                          "edges": [[0,1],[1,2],[2,3]]})"),
                  ParseError);
  // Duplicate edge.
  CHECK_THROWS_AS(parse_partition_json(
                      R"({"vertices": [["0","0"], ["1","0"], ["0","1"]],
                          "edges": [[0,1],[1,2],[2,0],[1,0]]})"),
                  ParseError);
  // Degenerate edge.
  CHECK_THROWS_AS(parse_partition_json(
                      R"({"vertices": [["0","0"], ["1","0"], ["0","1"]],
                          "edges": [[0,1],[1,2],[2,0],[1,1]]})"),
                  ParseError);
}

TEST_CASE("basis file round-trip rebuilds a verifiable basis") {
  PartitionInput in = read_partition_file(fixture_path("morgan_scott_symmetric.json"));
  Partition p = Partition::build(in.vertices, in.edges);
  SplineBasis basis = run_pipeline(p, 2, 1);

  std::string text = basis_to_json(basis, in);
  BasisFileData data = parse_basis_json(text);
  CHECK(data.degree == 2);
  CHECK(data.smoothness == 1);
  CHECK(data.dimension == 7);
  CHECK(data.functions.size() == 7);

  SplineBasis rebuilt = rebuild_basis(data);
  CHECK(rebuilt.members.size() == basis.members.size());
  verify_basis(rebuilt);

  // Emission is deterministic.
  CHECK(basis_to_json(rebuilt, data.partition) == text);
}

TEST_CASE("tampering with a basis file is detected") {
  PartitionInput in = read_partition_file(fixture_path("square_diag.json"));
  Partition p = Partition::build(in.vertices, in.edges);
  SplineBasis basis = run_pipeline(p, 3, 1);
  std::string text = basis_to_json(basis, in);

  SUBCASE("fingerprint mismatch") {
    BasisFileData data = parse_basis_json(text);
    data.fingerprint[0] = data.fingerprint[0] == 'a' ? 'b' : 'a';
    CHECK_THROWS_AS(rebuild_basis(data), NotABasis);
  }

  SUBCASE("edited coefficient breaks smoothness or independence") {
    BasisFileData data = parse_basis_json(text);
    data.functions.back().back().back() += Rational(1);
    SplineBasis rebuilt = rebuild_basis(data);  // structurally fine
    CHECK_THROWS_AS(verify_basis(rebuilt), NotASolution);
  }

  SUBCASE("dropped member changes the dimension") {
    BasisFileData data = parse_basis_json(text);
    data.functions.pop_back();
    data.dimension -= 1;
    SplineBasis rebuilt = rebuild_basis(data);
    CHECK_THROWS_AS(verify_basis(rebuilt), NotABasis);
  }

  SUBCASE("duplicated member is linearly dependent") {
    BasisFileData data = parse_basis_json(text);
    data.functions.push_back(data.functions.front());
    data.dimension += 1;
    SplineBasis rebuilt = rebuild_basis(data);
    CHECK_THROWS_AS(verify_basis(rebuilt), NotABasis);
  }

  SUBCASE("inconsistent counts are rejected at rebuild") {
    BasisFileData data = parse_basis_json(text);
    data.functions.back().pop_back();  // one cell short
    CHECK_THROWS_AS(rebuild_basis(data), NotABasis);
  }
}

TEST_CASE("basis json parser rejects malformed input") {
  CHECK_THROWS_AS(parse_basis_json("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_basis_json(R"({"degree": 2})"), ParseError);
}
