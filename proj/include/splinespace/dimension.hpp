#pragma once

#include <optional>

#include "splinespace/partition.hpp"

namespace splinespace {

// Dimension contribution of an interior vertex met by N distinct lines.
long k_d_mu(int N, int d, int mu);

// Closed-form dimension of the C^mu degree-d spline space.  The partition
// class must match: dim_cross_cut requires every maximal segment to be a
// cross-cut, dim_quasi_cross_cut also allows rays.
long dim_cross_cut(const Partition& p, int d, int mu);
long dim_quasi_cross_cut(const Partition& p, int d, int mu);

struct DimReport {
  std::optional<long> formula;  // absent when the class does not admit one
  std::optional<long> oracle;
  std::optional<long> eee;
  bool consistent = true;  // all present values agree
};

}  // namespace splinespace
