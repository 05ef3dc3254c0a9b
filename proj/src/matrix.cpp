#include "splinespace/matrix.hpp"

#include "splinespace/errors.hpp"

namespace splinespace {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void RatMatrix::append_row(const RatVector& row) {
  if (cols_ == 0 && rows_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw InternalError("append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw InternalError("apply: size mismatch");
  RatVector out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols_; ++j) {
      const Rational& e = at(i, j);
      if (e != 0 && v[j] != 0) s += e * v[j];
    }
    out[i] = s;
  }
  return out;
}

RatMatrix RatMatrix::multiplied(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("multiplied: size mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& e = at(i, k);
      if (e == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Rational& f = rhs.at(k, j);
        if (f != 0) out.at(i, j) += e * f;
      }
    }
  return out;
}

std::vector<int> RatMatrix::rref_in_place() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Rational inv = at(r, c);
    for (int j = c; j < cols_; ++j) at(r, j) /= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rational f = at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols_; ++j)
        if (at(r, j) != 0) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix RatMatrix::rref() const {
  RatMatrix m = *this;
  m.rref_in_place();
  return m;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<int>(m.rref_in_place().size());
}

std::vector<RatVector> RatMatrix::nullspace_basis() const {
  RatMatrix m = *this;
  std::vector<int> pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -m.at(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw InternalError("solve_linear: size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = aug.rref_in_place();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug.at(static_cast<int>(k), a.cols());
  return x;
}

bool is_zero_vector(const RatVector& v) {
  for (const Rational& q : v)
    if (q != 0) return false;
  return true;
}

bool proportional(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size()) return false;
  if (is_zero_vector(u) || is_zero_vector(v)) return false;
  Rational lambda;
  bool have = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] == 0) != (v[i] == 0)) return false;
    if (v[i] == 0) continue;
    Rational r = u[i] / v[i];
    if (!have) {
      lambda = r;
      have = true;
    } else if (r != lambda) {
      return false;
    }
  }
  return have;
}

}  // namespace splinespace
