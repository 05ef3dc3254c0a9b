#pragma once

#include <string>
#include <utility>
#include <vector>

#include "splinespace/conformality.hpp"
#include "splinespace/geometry.hpp"

namespace splinespace {

// Partition as it appears in an input file: vertex and edge order preserved,
// so cell indices derived from it are reproducible.
struct PartitionInput {
  std::vector<Pt> vertices;
  std::vector<std::pair<int, int>> edges;
  std::string name;  // empty when absent
};

PartitionInput parse_partition_json(const std::string& text);
std::string partition_to_json(const PartitionInput& in);

PartitionInput read_partition_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Content hash of vertices and edges; guards a basis file against being
// replayed over a different partition.
std::string fingerprint_hex(const PartitionInput& in);

struct BasisFileData {
  PartitionInput partition;
  std::string fingerprint;
  int degree = 0;
  int smoothness = 0;
  std::string route;
  long dimension = 0;
  // functions[member][cell] = graded-lex coefficient list, binom(d+2,2) long.
  std::vector<std::vector<std::vector<Rational>>> functions;
};

std::string basis_to_json(const SplineBasis& basis, const PartitionInput& in);
BasisFileData parse_basis_json(const std::string& text);
BasisFileData read_basis_file(const std::string& path);

// Reconstruct the splines over a freshly built partition and re-check the
// file's internal consistency (fingerprint, counts, lengths).
SplineBasis rebuild_basis(const BasisFileData& data);

// Full validity check: every member C^mu, members linearly independent, and
// the count matches the space dimension.
void verify_basis(const SplineBasis& basis);

}  // namespace splinespace
