#include "splinespace/dimension.hpp"

#include "splinespace/errors.hpp"
#include "splinespace/poly.hpp"

namespace splinespace {

long k_d_mu(int N, int d, int mu) {
  if (mu < 0 || d < 0 || mu > d)
    throw DegreeSmoothnessOrder("need 0 <= smoothness <= degree");
  if (N < 1) throw InvalidInput("vertex must be met by at least one line");
  long sum = 0;
  for (int j = 1; j <= d - mu; ++j) {
    long term = static_cast<long>(N) * (d - mu - j + 1) - (d - j + 2);
    if (term > 0) sum += term;
  }
  return sum;
}

namespace {

long dim_with_segments(const Partition& p, int d, int mu) {
  if (mu < 0 || mu > d)
    throw DegreeSmoothnessOrder("need 0 <= smoothness <= degree");
  long cross_cuts = 0;
  for (const MaximalSegment& seg : p.maximal_segments())
    if (seg.cls == SegmentClass::CrossCut) ++cross_cuts;
  long dim = binomial(d + 2, 2) + cross_cuts * binomial(d - mu + 1, 2);
  for (int v : p.interior_vertices())
    dim += k_d_mu(p.distinct_lines_at(v), d, mu);
  return dim;
}

}  // namespace

long dim_cross_cut(const Partition& p, int d, int mu) {
  if (p.partition_class() != PartitionClass::CrossCutPartition)
    throw NotCrossCut("partition has non-cross-cut segments");
  return dim_with_segments(p, d, mu);
}

long dim_quasi_cross_cut(const Partition& p, int d, int mu) {
  PartitionClass c = p.partition_class();
  if (c != PartitionClass::CrossCutPartition &&
      c != PartitionClass::QuasiCrossCutPartition)
    throw NotQuasiCrossCut("partition has interior segments");
  return dim_with_segments(p, d, mu);
}

}  // namespace splinespace
