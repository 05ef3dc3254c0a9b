#include "splinespace/conformality.hpp"

#include <algorithm>
#include <exception>

#include "splinespace/dimension.hpp"
#include "splinespace/errors.hpp"

namespace splinespace {

namespace {

// Signed incidence of an interior edge at one of its endpoints: +1 when a
// counter-clockwise walk around the vertex crosses the edge from the negative
// to the positive side of its line.  Equivalently, with u the edge direction
// away from the vertex, sign(b*ux - a*uy); the two halves of a line split at
// the vertex get opposite signs.
int edge_sign_at(const Partition& p, int edge, int vertex) {
  const EdgeRec& er = p.edges()[edge];
  int other = er.a == vertex ? er.b : er.a;
  Pt u = p.vertices()[other] - p.vertices()[vertex];
  int eps = rat_sign(er.line.b() * u.x - er.line.a() * u.y);
  if (eps == 0) throw InternalError("edge direction lies on its own line");
  return eps;
}

// Rows enforcing that signed cofactors around one interior vertex cancel:
// sum over incident interior edges of eps * q_e * L_e^{mu+1} = 0, expanded
// into one row per degree-d monomial.
void append_vertex_rows(RatMatrix& m, const Partition& p, int d, int mu,
                        int vertex, int nsrc, int nq,
                        const std::vector<int>& col_of_edge) {
  int base = m.rows();
  for (int r = 0; r < nsrc; ++r) m.append_row(std::vector<Rational>(m.cols()));
  for (int e : p.edges_at_vertex(vertex)) {
    if (col_of_edge[e] < 0) continue;  // boundary edge carries no cofactor
    int eps = edge_sign_at(p, e, vertex);
    Poly2 lp = Poly2::line_power(p.edges()[e].line, mu + 1);
    for (int k = 0; k < nq; ++k) {
      auto [xp, yp] = monomial_exponents(k);
      Poly2 term = (lp * Poly2::monomial(xp, yp, eps)).promoted(d);
      for (int r = 0; r < nsrc; ++r)
        m.at(base + r, col_of_edge[e] + k) += term.coeff_at(r);
    }
  }
}

}  // namespace

CofactorSystem assemble_conformality(std::shared_ptr<const Partition> p, int d,
                                     int mu) {
  if (mu < 0 || mu > d)
    throw DegreeSmoothnessOrder("need 0 <= smoothness <= degree");
  CofactorSystem sys;
  sys.part = p;
  sys.d = d;
  sys.mu = mu;
  sys.nsrc = static_cast<int>(binomial(d + 2, 2));
  sys.nq = static_cast<int>(binomial(d - mu + 1, 2));  // zero when mu == d
  sys.interior_edges = p->interior_edges();
  sys.col_of_edge.assign(p->edges().size(), -1);
  int col = sys.nsrc;
  for (int e : sys.interior_edges) {
    sys.col_of_edge[e] = col;
    col += sys.nq;
  }
  sys.m = RatMatrix(0, col);
  for (int v : p->interior_vertices())
    append_vertex_rows(sys.m, *p, d, mu, v, sys.nsrc, sys.nq, sys.col_of_edge);
  return sys;
}

long dimension_oracle(const Partition& p, int d, int mu) {
  CofactorSystem sys =
      assemble_conformality(std::make_shared<Partition>(p), d, mu);
  return sys.m.cols() - sys.m.rank();
}

Poly2 cofactor_of(const CofactorSystem& sys, const std::vector<Rational>& sol,
                  int edge) {
  if (edge < 0 || edge >= static_cast<int>(sys.col_of_edge.size()) ||
      sys.col_of_edge[edge] < 0)
    throw IndexOutOfRange("not an interior edge");
  Poly2 q(std::max(sys.d - sys.mu - 1, 0));
  for (int k = 0; k < sys.nq; ++k)
    q.set_coeff_at(k, sol[sys.col_of_edge[edge] + k]);
  return q;
}

Spline integrate_spline(const CofactorSystem& sys,
                        const std::vector<Rational>& sol, int source) {
  if (static_cast<int>(sol.size()) != sys.m.cols())
    throw InvalidInput("solution length does not match system");
  if (!is_zero_vector(sys.m.apply(sol)))
    throw NotASolution("vector does not satisfy the conformality system");
  const Partition& p = *sys.part;
  std::vector<DualStep> tree = p.dual_spanning_tree(source);
  Spline s;
  s.part = sys.part;
  s.d = sys.d;
  s.cell_polys.assign(p.cells().size(), Poly2(sys.d));
  Poly2 s0(sys.d);
  for (int k = 0; k < sys.nsrc; ++k) s0.set_coeff_at(k, sol[k]);
  // Parents precede children in BFS order, so one ordered pass suffices.
  std::vector<int> order;
  order.reserve(p.cells().size());
  {
    std::vector<std::vector<int>> kids(p.cells().size());
    for (int c = 0; c < static_cast<int>(tree.size()); ++c)
      if (tree[c].parent >= 0) kids[tree[c].parent].push_back(c);
    order.push_back(source);
    for (size_t i = 0; i < order.size(); ++i)
      for (int c : kids[order[i]]) order.push_back(c);
  }
  if (order.size() != p.cells().size())
    throw InternalError("dual tree did not reach every cell");
  for (int c : order) {
    if (c == source) {
      s.cell_polys[c] = s0;
      continue;
    }
    if (sys.nq == 0) {  // C^d continuity: no jumps at all
      s.cell_polys[c] = s.cell_polys[tree[c].parent];
      continue;
    }
    int e = tree[c].edge;
    const EdgeRec& er = p.edges()[e];
    // Cofactor times line power has degree bound exactly d.
    Poly2 jump =
        cofactor_of(sys, sol, e) * Poly2::line_power(er.line, sys.mu + 1);
    int sign = er.cell_pos == c ? 1 : -1;
    s.cell_polys[c] = s.cell_polys[tree[c].parent] + jump * Rational(sign);
  }
  return s;
}

bool check_spline(const Spline& s, int mu) {
  const Partition& p = *s.part;
  for (int e : p.interior_edges()) {
    const EdgeRec& er = p.edges()[e];
    Poly2 jump = s.cell_polys[er.cell_pos] - s.cell_polys[er.cell_neg];
    if (!jump.divided_by_line_power(er.line, mu + 1)) return false;
  }
  return true;
}

Rational eval_spline(const Spline& s, const Pt& at) {
  Locate loc = s.part->locate(at);
  if (loc.kind == Locate::Kind::Outside)
    throw Outside("point lies outside the domain");
  int cell = loc.kind == Locate::Kind::Cell
                 ? loc.cell
                 : std::max(s.part->edges()[loc.edge].cell_pos,
                            s.part->edges()[loc.edge].cell_neg);
  return s.cell_polys[cell].eval(at.x, at.y);
}

SplineBasis qcc_basis(const Partition& p, int d, int mu) {
  PartitionClass c = p.partition_class();
  if (c != PartitionClass::CrossCutPartition &&
      c != PartitionClass::QuasiCrossCutPartition)
    throw NotQuasiCrossCut("partition has interior segments");
  auto shared = std::make_shared<Partition>(p);
  CofactorSystem sys = assemble_conformality(shared, d, mu);
  std::vector<std::vector<Rational>> null = sys.m.nullspace_basis();
  SplineBasis basis;
  basis.part = shared;
  basis.d = d;
  basis.mu = mu;
  basis.route = "qcc";
  basis.members.resize(null.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(null.size()); ++i) {
    try {
      basis.members[i] = integrate_spline(sys, null[i]);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  for (const Spline& s : basis.members)
    if (!check_spline(s, mu))
      throw InternalError("integrated spline is not smooth");
  // The source-cell coefficient columns are zero, hence free, hence the
  // first nsrc nullspace vectors are exactly the global monomials.
  for (int k = 0; k < sys.nsrc && k < static_cast<int>(basis.members.size());
       ++k) {
    auto [xp, yp] = monomial_exponents(k);
    Poly2 mono = Poly2::monomial(xp, yp, 1);
    for (const Poly2& cp : basis.members[k].cell_polys)
      if (!(cp == mono)) throw InternalError("monomial member mismatch");
  }
  if (static_cast<long>(basis.members.size()) != dim_quasi_cross_cut(p, d, mu))
    throw InternalError("basis size disagrees with dimension formula");
  return basis;
}

SplineBasis qcc_basis(const ExtendedPartition& ep, int d, int mu) {
  return qcc_basis(ep.extended, d, mu);
}

long vertex_local_nullity(const Partition& p, int d, int mu, int vertex) {
  if (mu < 0 || mu > d)
    throw DegreeSmoothnessOrder("need 0 <= smoothness <= degree");
  int nsrc = static_cast<int>(binomial(d + 2, 2));
  int nq = static_cast<int>(binomial(d - mu + 1, 2));
  std::vector<int> incident;
  for (int e : p.edges_at_vertex(vertex))
    if (!p.is_boundary_edge(e)) incident.push_back(e);
  std::vector<int> col_of_edge(p.edges().size(), -1);
  int col = 0;
  for (int e : incident) {
    col_of_edge[e] = col;
    col += nq;
  }
  RatMatrix m(0, col);
  for (int r = 0; r < nsrc; ++r) m.append_row(std::vector<Rational>(m.cols()));
  for (int e : incident) {
    int eps = edge_sign_at(p, e, vertex);
    Poly2 lp = Poly2::line_power(p.edges()[e].line, mu + 1);
    for (int k = 0; k < nq; ++k) {
      auto [xp, yp] = monomial_exponents(k);
      Poly2 term = (lp * Poly2::monomial(xp, yp, eps)).promoted(d);
      for (int r = 0; r < nsrc; ++r)
        m.at(r, col_of_edge[e] + k) += term.coeff_at(r);
    }
  }
  return m.cols() - m.rank();
}

}  // namespace splinespace
