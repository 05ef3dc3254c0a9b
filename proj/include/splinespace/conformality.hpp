#pragma once

#include <memory>
#include <string>
#include <vector>

#include "splinespace/extend.hpp"
#include "splinespace/matrix.hpp"
#include "splinespace/partition.hpp"
#include "splinespace/poly.hpp"

namespace splinespace {

// Linear system expressing C^mu continuity across interior edges.  Unknowns
// are the coefficients of the polynomial on the start cell followed by one
// cofactor polynomial of degree d-mu-1 per interior edge; each interior
// vertex contributes one row per degree-d monomial.
struct CofactorSystem {
  std::shared_ptr<const Partition> part;
  int d = 0, mu = 0;
  int nsrc = 0;  // coefficients of the start-cell polynomial
  int nq = 0;    // coefficients per edge cofactor
  std::vector<int> interior_edges;
  std::vector<int> col_of_edge;  // first column of each edge's block, by edge id
  RatMatrix m;
};

CofactorSystem assemble_conformality(std::shared_ptr<const Partition> p, int d,
                                     int mu);

// Space dimension as the nullity of the conformality system.
long dimension_oracle(const Partition& p, int d, int mu);

// Piecewise polynomial: one degree-d polynomial per cell.
struct Spline {
  std::shared_ptr<const Partition> part;
  int d = 0;
  std::vector<Poly2> cell_polys;
};

// Recover the spline a solution vector describes by propagating cofactor
// jumps over a spanning tree of the dual graph rooted at `source`.
Spline integrate_spline(const CofactorSystem& sys, const std::vector<Rational>& sol,
                        int source = 0);

Poly2 cofactor_of(const CofactorSystem& sys, const std::vector<Rational>& sol,
                  int edge);

// True iff every interior-edge jump is divisible by the edge line to the
// power mu+1, i.e. the piecewise polynomial is globally C^mu.
bool check_spline(const Spline& s, int mu);

Rational eval_spline(const Spline& s, const Pt& at);

struct SplineBasis {
  std::shared_ptr<const Partition> part;
  int d = 0, mu = 0;
  std::vector<Spline> members;
  std::string route;  // "qcc" or "eee"
};

// Basis of the full spline space on a quasi-cross-cut partition.  The first
// binom(d+2,2) members are the global monomials in graded order.
SplineBasis qcc_basis(const Partition& p, int d, int mu);
SplineBasis qcc_basis(const ExtendedPartition& ep, int d, int mu);

// Nullity of the conformality rows of a single vertex; exposed for tests.
long vertex_local_nullity(const Partition& p, int d, int mu, int vertex);

}  // namespace splinespace
