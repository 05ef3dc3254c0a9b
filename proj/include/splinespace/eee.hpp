#pragma once

#include <vector>

#include "splinespace/conformality.hpp"
#include "splinespace/extend.hpp"
#include "splinespace/matrix.hpp"

namespace splinespace {

struct EEERowInfo {
  int subedge = -1;   // edge id in the extended partition
  int monomial = -1;  // graded-lex coefficient index the row forces to zero
};

// Linear conditions on combinations of extended-space basis functions that
// make the jump across every added sub-edge vanish identically.  One column
// per basis function; monomial columns are identically zero.
struct EEEMatrix {
  RatMatrix m{0, 0};
  std::vector<EEERowInfo> rows;
};

EEEMatrix assemble_eee(const ExtendedPartition& ep, const SplineBasis& basis);

// The same conditions expressed through derivatives: for each added sub-edge
// and each order r = mu+1..d, the r-th directional derivative of the jump
// along the line normal, restricted to the line, must vanish.  Same nullspace
// as assemble_eee by a degree count; kept as an independent cross-check.
RatMatrix eee_derivative_rows(const ExtendedPartition& ep,
                              const SplineBasis& basis);

// Combine the extended-space basis along the nullspace of the elimination
// system and re-express each result per cell of the base partition.
SplineBasis synthesize_basis(const ExtendedPartition& ep,
                             const SplineBasis& basis, const EEEMatrix& m);

// Extended-space dimension minus elimination rank.
long dimension_via_eee(const Partition& p, int d, int mu,
                       ExtendStrategy strategy = ExtendStrategy::Qcc);

// extend -> direct basis on the extension -> eliminate -> merge back.
SplineBasis run_pipeline(const Partition& p, int d, int mu,
                         ExtendStrategy strategy = ExtendStrategy::Qcc);

}  // namespace splinespace
