#pragma once

// Dense exact matrices over Rational with deterministic reduced row-echelon
// form. Rank decisions made here are exact; there is no tolerance anywhere.
// Determinism contract: the pivot of each step is the first nonzero entry in
// column order (rows scanned top to bottom), and nullspace vectors are emitted
// in ascending free-column order. Golden tests rely on both.

#include <vector>

#include "splinespace/rational.hpp"

namespace splinespace {

using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  void append_row(const RatVector& row);

  RatVector apply(const RatVector& v) const;  // m · v
  RatMatrix multiplied(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // In-place Gauss-Jordan; returns the pivot columns in ascending order.
  std::vector<int> rref_in_place();

  RatMatrix rref() const;
  int rank() const;

  // Basis of {x : m·x = 0}, one vector per free column, ascending column
  // order; the vector for free column f has x[f] = 1 and zeros at all other
  // free columns.
  std::vector<RatVector> nullspace_basis() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Exact solve of a·x = b; absent when inconsistent. When the solution is not
// unique, free variables are set to zero (deterministic).
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

bool is_zero_vector(const RatVector& v);

// True when u = lambda · v for some nonzero rational lambda (both nonzero).
bool proportional(const RatVector& u, const RatVector& v);

}  // namespace splinespace
