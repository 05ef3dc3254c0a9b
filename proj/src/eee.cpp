#include "splinespace/eee.hpp"

#include <algorithm>

#include "splinespace/errors.hpp"

namespace splinespace {

namespace {

// The candidate set must be a genuine basis of the extended space before any
// elimination conclusion is valid.
void precheck_basis(const ExtendedPartition& ep, const SplineBasis& basis) {
  const Partition& ext = ep.extended;
  if (!basis.part || basis.part->vertices() != ext.vertices() ||
      basis.part->cells() != ext.cells())
    throw NotABasis("basis does not live on the extended partition");
  if (basis.mu < 0 || basis.mu > basis.d)
    throw NotABasis("invalid degree/smoothness pair");
  int ncells = static_cast<int>(ext.cells().size());
  int ncoef = poly2_size(basis.d);
  RatMatrix stacked(0, ncells * ncoef);
  for (const Spline& s : basis.members) {
    if (static_cast<int>(s.cell_polys.size()) != ncells)
      throw NotABasis("member does not cover every cell");
    if (!check_spline(s, basis.mu))
      throw NotABasis("member is not smooth on the extended partition");
    std::vector<Rational> row(ncells * ncoef);
    for (int c = 0; c < ncells; ++c)
      for (int k = 0; k < ncoef; ++k)
        row[c * ncoef + k] = s.cell_polys[c].coeff_at(k);
    stacked.append_row(row);
  }
  if (stacked.rank() != static_cast<int>(basis.members.size()))
    throw NotABasis("members are linearly dependent");
  if (static_cast<long>(basis.members.size()) !=
      dimension_oracle(ext, basis.d, basis.mu))
    throw NotABasis("member count does not span the extended space");
}

Poly2 subedge_jump(const Spline& s, const EdgeRec& er) {
  return s.cell_polys[er.cell_pos] - s.cell_polys[er.cell_neg];
}

}  // namespace

EEEMatrix assemble_eee(const ExtendedPartition& ep, const SplineBasis& basis) {
  precheck_basis(ep, basis);
  const Partition& ext = ep.extended;
  int n = static_cast<int>(basis.members.size());
  int ncoef = poly2_size(basis.d);
  EEEMatrix out;
  out.m = RatMatrix(0, n);
  for (int e : ep.added_subedges) {
    const EdgeRec& er = ext.edges()[e];
    if (er.cell_pos < 0 || er.cell_neg < 0)
      throw InternalError("added sub-edge is not interior");
    std::vector<std::vector<Rational>> block(
        ncoef, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      Poly2 jump = subedge_jump(basis.members[i], er);
      for (int k = 0; k < ncoef; ++k) block[k][i] = jump.coeff_at(k);
    }
    for (int k = 0; k < ncoef; ++k) {
      out.m.append_row(block[k]);
      out.rows.push_back(EEERowInfo{e, k});
    }
  }
  return out;
}

RatMatrix eee_derivative_rows(const ExtendedPartition& ep,
                              const SplineBasis& basis) {
  precheck_basis(ep, basis);
  const Partition& ext = ep.extended;
  int n = static_cast<int>(basis.members.size());
  RatMatrix m(0, n);
  for (int e : ep.added_subedges) {
    const EdgeRec& er = ext.edges()[e];
    Pt normal = er.line.normal();
    for (int r = basis.mu + 1; r <= basis.d; ++r) {
      // The restricted derivative has degree at most d - r along the line.
      std::vector<std::vector<Rational>> block(
          basis.d - r + 1, std::vector<Rational>(n));
      for (int i = 0; i < n; ++i) {
        Poly1 rest = subedge_jump(basis.members[i], er)
                         .directional_derivative(normal, r)
                         .restrict_to_line(er.line);
        for (int k = 0; k <= basis.d - r; ++k) block[k][i] = rest.coeff(k);
      }
      for (auto& row : block) m.append_row(row);
    }
  }
  return m;
}

SplineBasis synthesize_basis(const ExtendedPartition& ep,
                             const SplineBasis& basis, const EEEMatrix& m) {
  const Partition& ext = ep.extended;
  const Partition& base = ep.base;
  if (m.m.cols() != static_cast<int>(basis.members.size()))
    throw InvalidInput("matrix does not match the basis");
  // Map each extended cell to the base cell containing it.
  std::vector<int> base_cell(ext.cells().size(), -1);
  for (int c = 0; c < static_cast<int>(ext.cells().size()); ++c) {
    Locate loc = base.locate(ext.cell_interior_point(c));
    if (loc.kind != Locate::Kind::Cell)
      throw InternalError("extended cell has no home in the base partition");
    base_cell[c] = loc.cell;
  }
  auto base_shared = std::make_shared<Partition>(base);
  SplineBasis out;
  out.part = base_shared;
  out.d = basis.d;
  out.mu = basis.mu;
  out.route = "eee";
  for (const std::vector<Rational>& c : m.m.nullspace_basis()) {
    // Combine on the extended partition.
    std::vector<Poly2> fine(ext.cells().size(), Poly2(basis.d));
    for (int i = 0; i < static_cast<int>(basis.members.size()); ++i) {
      if (c[i] == 0) continue;
      for (size_t cell = 0; cell < fine.size(); ++cell)
        fine[cell] += basis.members[i].cell_polys[cell] * c[i];
    }
    // Merge: all pieces of one base cell must agree once jumps across added
    // sub-edges vanish.
    Spline s;
    s.part = base_shared;
    s.d = basis.d;
    s.cell_polys.assign(base.cells().size(), Poly2(basis.d));
    std::vector<char> seen(base.cells().size(), 0);
    for (size_t cell = 0; cell < fine.size(); ++cell) {
      int b = base_cell[cell];
      if (!seen[b]) {
        s.cell_polys[b] = fine[cell];
        seen[b] = 1;
      } else if (!(s.cell_polys[b] == fine[cell])) {
        throw InternalError("elimination left a jump inside a base cell");
      }
    }
    for (char f : seen)
      if (!f) throw InternalError("base cell not covered by extended cells");
    if (!check_spline(s, out.mu))
      throw InternalError("synthesized spline is not smooth on the base");
    out.members.push_back(std::move(s));
  }
  return out;
}

long dimension_via_eee(const Partition& p, int d, int mu,
                       ExtendStrategy strategy) {
  ExtendedPartition ep = extend_partition(p, strategy);
  SplineBasis basis = qcc_basis(ep, d, mu);
  EEEMatrix m = assemble_eee(ep, basis);
  return static_cast<long>(basis.members.size()) - m.m.rank();
}

SplineBasis run_pipeline(const Partition& p, int d, int mu,
                         ExtendStrategy strategy) {
  ExtendedPartition ep = extend_partition(p, strategy);
  SplineBasis basis = qcc_basis(ep, d, mu);
  EEEMatrix m = assemble_eee(ep, basis);
  return synthesize_basis(ep, basis, m);
}

}  // namespace splinespace
