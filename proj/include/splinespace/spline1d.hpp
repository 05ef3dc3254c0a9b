#pragma once

// One-dimensional spline spaces on an interval: exact B-spline evaluation
// over rational knots, the edge-elimination system at removed knots, and
// coarse-from-fine basis synthesis.  A Boehm knot-insertion transition matrix
// is provided as an independent cross-check; the production path for coarse
// bases is the elimination nullspace.

#include <vector>

#include "splinespace/matrix.hpp"
#include "splinespace/rational.hpp"

namespace splinespace {

// Which one-sided limit to take when evaluating exactly at a knot.  Values
// and derivatives of a spline are two-valued at a breakpoint with enough
// multiplicity; everywhere else the two limits agree.
enum class Side { Left, Right };

// Knot vector of the space S_d^mu on [a, b]: every interior breakpoint
// carries multiplicity d - mu, the two endpoints carry d + 1.
class KnotVector {
 public:
  KnotVector(int d, int mu, const Rational& a, const Rational& b,
             std::vector<Rational> interior);

  int degree() const { return d_; }
  int smoothness() const { return mu_; }
  const Rational& a() const { return breakpoints_.front(); }
  const Rational& b() const { return breakpoints_.back(); }

  // Breakpoints in ascending order, endpoints included, with the per-
  // breakpoint multiplicities and the flattened (repeated) knot list.
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<Rational>& knots() const { return knots_; }

  std::vector<Rational> interior() const;
  int interior_count() const { return static_cast<int>(breakpoints_.size()) - 2; }

  // dim S_d^mu = (d+1) + #interior * (d - mu).
  int dimension() const;

  // True when this knot vector contains every knot of `coarse` (same degree,
  // smoothness and interval).
  bool refines(const KnotVector& coarse) const;

  bool operator==(const KnotVector& o) const {
    return d_ == o.d_ && mu_ == o.mu_ && breakpoints_ == o.breakpoints_;
  }

 private:
  int d_, mu_;
  std::vector<Rational> breakpoints_;
  std::vector<int> mult_;
  std::vector<Rational> knots_;
};

// Exact value of the r-th one-sided derivative of the `index`-th B-spline at
// x, via the divided-difference recursion over rationals.  At interior
// breakpoints the side is honoured; x = a always takes the right limit and
// x = b the left one (the other limit leaves the domain).
Rational bspline_eval(const KnotVector& kv, int index, const Rational& x, int r = 0,
                      Side side = Side::Right);

// Elimination system for recovering S_d^mu(coarse) inside S_d^mu(fine): one
// row per removed breakpoint and derivative order r = mu+1..d, stating that
// the one-sided r-th derivative jump of sum c_i B_i vanishes there.
RatMatrix eee_1d(const KnotVector& fine, const KnotVector& coarse);

// Nullspace basis of eee_1d: coefficient vectors over the fine basis whose
// combinations form a basis of the coarse space.
std::vector<RatVector> coarse_basis_1d(const KnotVector& fine, const KnotVector& coarse);

// Knot-insertion transition matrix A with B_coarse = B_fine * A, computed by
// exact single-knot Boehm steps.  Cross-check only: its columns must lie in
// the nullspace of eee_1d.
RatMatrix insertion_matrix(const KnotVector& fine, const KnotVector& coarse);

}  // namespace splinespace
