#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splinespace/geometry.hpp"
#include "splinespace/rational.hpp"

namespace splinespace {

long binomial(int n, int k);

// Number of bivariate monomials of total degree <= deg.
int poly2_size(int deg);

// Graded-lex position of x^xp * y^yp: degrees ascend, and within one degree
// the x exponent descends (1, x, y, x^2, xy, y^2, ...).
int monomial_index(int xp, int yp);
std::pair<int, int> monomial_exponents(int idx);

// Line a*x + b*y + c = 0 in canonical form: integer coefficients with
// gcd 1 and the first nonzero of (a, b, c) positive, so equal lines compare
// equal and lines order deterministically.
class LineForm {
 public:
  LineForm(const Rational& a, const Rational& b, const Rational& c);
  static LineForm through(const Pt& p, const Pt& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  Rational eval(const Pt& p) const { return a_ * p.x + b_ * p.y + c_; }
  int side(const Pt& p) const { return rat_sign(eval(p)); }
  bool contains(const Pt& p) const { return eval(p) == 0; }

  Pt direction() const { return Pt(-b_, a_); }
  Pt normal() const { return Pt(a_, b_); }
  // Point of the line closest to the origin; rational, so the line is
  // parametrized exactly as foot() + t * direction().
  Pt foot() const;

  bool operator==(const LineForm& o) const;
  bool operator!=(const LineForm& o) const { return !(*this == o); }
  bool operator<(const LineForm& o) const;

  std::string str() const;

 private:
  Rational a_, b_, c_;  // integral after canonicalization
};

// Univariate polynomial, coefficients ascending, trailing zeros trimmed.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs);
  static Poly1 constant(const Rational& v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& t) const;
  Poly1 derivative() const;

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 operator*(const Rational& s) const;
  Poly1& operator+=(const Poly1& o);
  bool operator==(const Poly1& o) const { return c_ == o.c_; }
  bool operator!=(const Poly1& o) const { return !(*this == o); }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Bivariate polynomial stored as a dense graded-lex coefficient vector of
// length poly2_size(degree_bound()). The bound tracks allocated space, not
// the exact degree.
class Poly2 {
 public:
  Poly2() : deg_(0), c_(1) {}
  explicit Poly2(int deg);
  Poly2(int deg, std::vector<Rational> coeffs);
  static Poly2 constant(const Rational& v);
  static Poly2 monomial(int xp, int yp, const Rational& coef);
  static Poly2 from_line(const LineForm& l);
  static Poly2 line_power(const LineForm& l, int k);

  int degree_bound() const { return deg_; }
  int true_degree() const;  // -1 for the zero polynomial
  bool is_zero() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int xp, int yp) const;  // 0 past the bound
  void set_coeff(int xp, int yp, const Rational& v);
  // Flat graded-lex index variants, for packing rows of linear systems.
  Rational coeff_at(int idx) const;  // 0 past the bound
  void set_coeff_at(int idx, const Rational& v);
  Poly2 promoted(int deg) const;
  Poly2 truncated_to_true_degree() const;

  Rational eval(const Rational& x, const Rational& y) const;
  Rational eval(const Pt& p) const { return eval(p.x, p.y); }

  Poly2 dx() const;
  Poly2 dy() const;
  // r applications of nx*d/dx + ny*d/dy; r = 0 returns the polynomial.
  Poly2 directional_derivative(const Pt& n, int r) const;

  // Univariate restriction p(foot + t*direction) along l.
  Poly1 restrict_to_line(const LineForm& l) const;

  // Exact quotient p / l^k, or nullopt when l^k does not divide p.
  std::optional<Poly2> divided_by_line_power(const LineForm& l, int k) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rational& s) const;
  Poly2& operator+=(const Poly2& o);
  bool operator==(const Poly2& o) const;  // degree-bound insensitive
  bool operator!=(const Poly2& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int deg_;
  std::vector<Rational> c_;
};

}  // namespace splinespace
