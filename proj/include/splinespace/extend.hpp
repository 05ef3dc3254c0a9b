#pragma once

#include <vector>

#include "splinespace/partition.hpp"

namespace splinespace {

enum class ExtendStrategy { Qcc, CrossCut };

struct ExtendedPartition {
  Partition base;
  Partition extended;
  // Edge ids in `extended` whose point sets are not contained in any base
  // edge.
  std::vector<int> added_subedges;
  int s = 0;  // number of extension operations performed
};

// Extends interior maximal segments along their own lines until the result
// is quasi-cross-cut (every maximal segment touches the boundary) or, with
// CrossCut, until every maximal segment runs boundary to boundary.
ExtendedPartition extend_partition(const Partition& p, ExtendStrategy s);
ExtendedPartition extend_to_qcc(const Partition& p);
ExtendedPartition extend_to_crosscut(const Partition& p);

}  // namespace splinespace
