#include "splinespace/spline1d.hpp"

#include <algorithm>
#include <cstddef>

#include "splinespace/errors.hpp"

namespace splinespace {

KnotVector::KnotVector(int d, int mu, const Rational& a, const Rational& b,
                       std::vector<Rational> interior)
    : d_(d), mu_(mu) {
  if (d < 0 || mu < 0 || mu > d) {
    throw DegreeSmoothnessOrder("need 0 <= smoothness <= degree");
  }
  if (!(a < b)) throw InvalidInput("empty interval");
  std::sort(interior.begin(), interior.end());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    if (!(a < interior[i] && interior[i] < b)) {
      throw InvalidInput("interior breakpoint outside open interval");
    }
    if (i > 0 && interior[i] == interior[i - 1]) {
      throw InvalidInput("duplicate interior breakpoint");
    }
  }

  breakpoints_.reserve(interior.size() + 2);
  breakpoints_.push_back(a);
  breakpoints_.insert(breakpoints_.end(), interior.begin(), interior.end());
  breakpoints_.push_back(b);

  mult_.assign(breakpoints_.size(), d_ - mu_);
  mult_.front() = d_ + 1;
  mult_.back() = d_ + 1;

  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    for (int k = 0; k < mult_[i]; ++k) knots_.push_back(breakpoints_[i]);
  }
}

std::vector<Rational> KnotVector::interior() const {
  return std::vector<Rational>(breakpoints_.begin() + 1, breakpoints_.end() - 1);
}

int KnotVector::dimension() const {
  return d_ + 1 + interior_count() * (d_ - mu_);
}

bool KnotVector::refines(const KnotVector& coarse) const {
  if (d_ != coarse.d_ || mu_ != coarse.mu_) return false;
  if (a() != coarse.a() || b() != coarse.b()) return false;
  return std::includes(breakpoints_.begin(), breakpoints_.end(),
                       coarse.breakpoints_.begin(), coarse.breakpoints_.end());
}

namespace {

// One-sided level-0 indicator: the span [t_j, t_{j+1}) from the right, or
// (t_j, t_{j+1}] from the left.
Rational level0(const std::vector<Rational>& t, int j, const Rational& x, Side side) {
  if (t[static_cast<std::size_t>(j)] == t[static_cast<std::size_t>(j) + 1]) {
    return Rational(0);
  }
  const Rational& lo = t[static_cast<std::size_t>(j)];
  const Rational& hi = t[static_cast<std::size_t>(j) + 1];
  bool in = (side == Side::Right) ? (lo <= x && x < hi) : (lo < x && x <= hi);
  return in ? Rational(1) : Rational(0);
}

}  // namespace

Rational bspline_eval(const KnotVector& kv, int index, const Rational& x, int r,
                      Side side) {
  const int n = kv.dimension();
  if (index < 0 || index >= n) throw IndexOutOfRange("basis index out of range");
  if (r < 0) throw InvalidInput("negative derivative order");
  if (x < kv.a() || kv.b() < x) throw OutOfDomain("evaluation point outside interval");
  const int d = kv.degree();
  if (r > d) return Rational(0);

  // The other one-sided limit at an endpoint leaves the domain.
  if (x == kv.a()) side = Side::Right;
  if (x == kv.b()) side = Side::Left;

  const std::vector<Rational>& t = kv.knots();

  // Differentiate r times: express the r-th derivative of B_{index,d} as an
  // exact combination of B_{index+o, d-r}, o = 0..r.
  std::vector<Rational> coef{Rational(1)};
  for (int s = 0; s < r; ++s) {
    int k = d - s;  // current level
    std::vector<Rational> next(coef.size() + 1, Rational(0));
    for (std::size_t o = 0; o < coef.size(); ++o) {
      if (coef[o] == Rational(0)) continue;
      int j = index + static_cast<int>(o);
      const Rational den1 = t[static_cast<std::size_t>(j + k)] - t[static_cast<std::size_t>(j)];
      const Rational den2 =
          t[static_cast<std::size_t>(j + k + 1)] - t[static_cast<std::size_t>(j + 1)];
      if (den1 != Rational(0)) next[o] += coef[o] * Rational(k) / den1;
      if (den2 != Rational(0)) next[o + 1] -= coef[o] * Rational(k) / den2;
    }
    coef = std::move(next);
  }

  // Cox-de Boor for each needed level-(d-r) function, one-sided at knots.
  Rational total(0);
  const int level = d - r;
  for (std::size_t o = 0; o < coef.size(); ++o) {
    if (coef[o] == Rational(0)) continue;
    int j0 = index + static_cast<int>(o);
    // values[m] = B_{j0+m, k}(x) as k climbs from 0 to `level`.
    std::vector<Rational> values(static_cast<std::size_t>(level) + 1);
    for (int m = 0; m <= level; ++m) values[static_cast<std::size_t>(m)] = level0(t, j0 + m, x, side);
    for (int k = 1; k <= level; ++k) {
      for (int m = 0; m + k <= level; ++m) {
        int j = j0 + m;
        Rational v(0);
        const Rational den1 = t[static_cast<std::size_t>(j + k)] - t[static_cast<std::size_t>(j)];
        const Rational den2 =
            t[static_cast<std::size_t>(j + k + 1)] - t[static_cast<std::size_t>(j + 1)];
        if (den1 != Rational(0)) {
          v += (x - t[static_cast<std::size_t>(j)]) / den1 * values[static_cast<std::size_t>(m)];
        }
        if (den2 != Rational(0)) {
          v += (t[static_cast<std::size_t>(j + k + 1)] - x) / den2 *
               values[static_cast<std::size_t>(m) + 1];
        }
        values[static_cast<std::size_t>(m)] = v;
      }
    }
    total += coef[o] * values[0];
  }
  return total;
}

RatMatrix eee_1d(const KnotVector& fine, const KnotVector& coarse) {
  if (!fine.refines(coarse)) {
    throw NotARefinement("fine knot vector does not refine the coarse one");
  }
  const int d = fine.degree();
  const int mu = fine.smoothness();
  const int n = fine.dimension();

  std::vector<Rational> removed;
  const auto coarse_bp = coarse.breakpoints();
  for (const Rational& x : fine.interior()) {
    if (!std::binary_search(coarse_bp.begin(), coarse_bp.end(), x)) removed.push_back(x);
  }

  RatMatrix m(static_cast<int>(removed.size()) * (d - mu), n);
  int row = 0;
  for (const Rational& x : removed) {
    for (int r = mu + 1; r <= d; ++r) {
      for (int i = 0; i < n; ++i) {
        m.at(row, i) = bspline_eval(fine, i, x, r, Side::Right) -
                       bspline_eval(fine, i, x, r, Side::Left);
      }
      ++row;
    }
  }
  return m;
}

std::vector<RatVector> coarse_basis_1d(const KnotVector& fine, const KnotVector& coarse) {
  auto basis = eee_1d(fine, coarse).nullspace_basis();
  if (static_cast<int>(basis.size()) != coarse.dimension()) {
    throw InternalError("elimination nullspace does not match the coarse dimension");
  }
  return basis;
}

RatMatrix insertion_matrix(const KnotVector& fine, const KnotVector& coarse) {
  if (!fine.refines(coarse)) {
    throw NotARefinement("fine knot vector does not refine the coarse one");
  }
  const int d = fine.degree();
  std::vector<Rational> t = coarse.knots();
  RatMatrix a = RatMatrix::identity(coarse.dimension());

  // Insert missing knots one at a time, ascending.
  std::vector<Rational> target = fine.knots();
  while (t.size() < target.size()) {
    // First target knot whose multiplicity so far is short.
    Rational u(0);
    bool found = false;
    for (std::size_t i = 0, j = 0; i < target.size(); ++i) {
      if (j < t.size() && t[j] == target[i]) {
        ++j;
        continue;
      }
      u = target[i];
      found = true;
      break;
    }
    if (!found) throw InternalError("knot multiset mismatch during insertion");

    // t_k <= u < t_{k+1} with t_k the last knot not exceeding u.
    int k = -1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] <= u) k = static_cast<int>(i);
    }
    if (k < d || k >= static_cast<int>(t.size()) - 1) {
      throw InternalError("inserted knot outside the interval");
    }

    const int n = static_cast<int>(t.size()) - d - 1;  // current dimension
    RatMatrix step(n + 1, n);
    for (int j = 0; j <= n; ++j) {
      Rational beta;
      if (j <= k - d) {
        beta = Rational(1);
      } else if (j <= k) {
        beta = (u - t[static_cast<std::size_t>(j)]) /
               (t[static_cast<std::size_t>(j + d)] - t[static_cast<std::size_t>(j)]);
      } else {
        beta = Rational(0);
      }
      if (j < n && beta != Rational(0)) step.at(j, j) = beta;
      if (j > 0 && beta != Rational(1)) step.at(j, j - 1) = Rational(1) - beta;
    }
    a = step.multiplied(a);
    t.insert(std::upper_bound(t.begin(), t.end(), u), u);
  }

  if (t != target) throw InternalError("knot insertion did not reach the fine vector");
  return a;
}

}  // namespace splinespace
