#include "splinespace/poly.hpp"

#include <algorithm>
#include <sstream>

#include "splinespace/errors.hpp"

namespace splinespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int poly2_size(int deg) { return static_cast<int>(binomial(deg + 2, 2)); }

int monomial_index(int xp, int yp) {
  int t = xp + yp;
  return t * (t + 1) / 2 + (t - xp);
}

std::pair<int, int> monomial_exponents(int idx) {
  int t = 0;
  while ((t + 1) * (t + 2) / 2 <= idx) ++t;
  int off = idx - t * (t + 1) / 2;
  return {t - off, off};
}

// --- LineForm ---

LineForm::LineForm(const Rational& a, const Rational& b, const Rational& c)
    : a_(a), b_(b), c_(c) {
  if (a_ == 0 && b_ == 0) throw InvalidInput("degenerate line form");
  mpz_class l = lcm(lcm(a_.get_den(), b_.get_den()), c_.get_den());
  mpz_class ia = a_.get_num() * (l / a_.get_den());
  mpz_class ib = b_.get_num() * (l / b_.get_den());
  mpz_class ic = c_.get_num() * (l / c_.get_den());
  mpz_class g = gcd(gcd(ia, ib), ic);
  ia /= g;
  ib /= g;
  ic /= g;
  if (ia < 0 || (ia == 0 && ib < 0)) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  a_ = Rational(ia);
  b_ = Rational(ib);
  c_ = Rational(ic);
}

LineForm LineForm::through(const Pt& p, const Pt& q) {
  if (p == q) throw InvalidInput("line through coincident points");
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = -(a * p.x + b * p.y);
  return LineForm(a, b, c);
}

Pt LineForm::foot() const {
  Rational n2 = a_ * a_ + b_ * b_;
  return Pt(-a_ * c_ / n2, -b_ * c_ / n2);
}

bool LineForm::operator==(const LineForm& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

bool LineForm::operator<(const LineForm& o) const {
  if (a_ != o.a_) return a_ < o.a_;
  if (b_ != o.b_) return b_ < o.b_;
  return c_ < o.c_;
}

std::string LineForm::str() const {
  std::ostringstream os;
  os << "(" << rat_str(a_) << "," << rat_str(b_) << "," << rat_str(c_) << ")";
  return os.str();
}

// --- Poly1 ---

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly1 Poly1::constant(const Rational& v) {
  return Poly1(std::vector<Rational>{v});
}

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly1::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational Poly1::eval(const Rational& t) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return Poly1();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Poly1(std::move(d));
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly1(std::move(r));
}

Poly1 Poly1::operator-(const Poly1& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Poly1(std::move(r));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (is_zero() || o.is_zero()) return Poly1();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly1(std::move(r));
}

Poly1 Poly1::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (Rational& q : r) q *= s;
  return Poly1(std::move(r));
}

Poly1& Poly1::operator+=(const Poly1& o) {
  *this = *this + o;
  return *this;
}

// --- Poly2 ---

Poly2::Poly2(int deg) : deg_(deg), c_(poly2_size(deg)) {
  if (deg < 0) throw InternalError("negative polynomial degree");
}

Poly2::Poly2(int deg, std::vector<Rational> coeffs)
    : deg_(deg), c_(std::move(coeffs)) {
  if (deg < 0 || static_cast<int>(c_.size()) != poly2_size(deg))
    throw InternalError("coefficient vector length mismatch");
}

Poly2 Poly2::constant(const Rational& v) {
  Poly2 p(0);
  p.c_[0] = v;
  return p;
}

Poly2 Poly2::monomial(int xp, int yp, const Rational& coef) {
  if (xp < 0 || yp < 0) throw InternalError("negative exponent");
  Poly2 p(xp + yp);
  p.c_[monomial_index(xp, yp)] = coef;
  return p;
}

Poly2 Poly2::from_line(const LineForm& l) {
  Poly2 p(1);
  p.set_coeff(1, 0, l.a());
  p.set_coeff(0, 1, l.b());
  p.set_coeff(0, 0, l.c());
  return p;
}

Poly2 Poly2::line_power(const LineForm& l, int k) {
  if (k < 0) throw InternalError("negative line power");
  Poly2 r = constant(1);
  Poly2 base = from_line(l);
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

int Poly2::true_degree() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (c_[i] != 0) return monomial_exponents(i).first + monomial_exponents(i).second;
  return -1;
}

bool Poly2::is_zero() const {
  for (const Rational& q : c_)
    if (q != 0) return false;
  return true;
}

Rational Poly2::coeff(int xp, int yp) const {
  if (xp < 0 || yp < 0) return 0;
  if (xp + yp > deg_) return 0;
  return c_[monomial_index(xp, yp)];
}

void Poly2::set_coeff(int xp, int yp, const Rational& v) {
  if (xp < 0 || yp < 0 || xp + yp > deg_)
    throw InternalError("coefficient outside degree bound");
  c_[monomial_index(xp, yp)] = v;
}

Rational Poly2::coeff_at(int idx) const {
  if (idx < 0) throw InternalError("negative coefficient index");
  return idx < static_cast<int>(c_.size()) ? c_[idx] : Rational(0);
}

void Poly2::set_coeff_at(int idx, const Rational& v) {
  if (idx < 0 || idx >= static_cast<int>(c_.size()))
    throw InternalError("coefficient outside degree bound");
  c_[idx] = v;
}

Poly2 Poly2::promoted(int deg) const {
  if (deg < deg_) throw InternalError("promotion would truncate");
  Poly2 p(deg);
  std::copy(c_.begin(), c_.end(), p.c_.begin());
  return p;
}

Poly2 Poly2::truncated_to_true_degree() const {
  int d = std::max(true_degree(), 0);
  Poly2 p(d);
  std::copy(c_.begin(), c_.begin() + poly2_size(d), p.c_.begin());
  return p;
}

Rational Poly2::eval(const Rational& x, const Rational& y) const {
  std::vector<Rational> xp(deg_ + 1), yp(deg_ + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (int i = 1; i <= deg_; ++i) {
    xp[i] = xp[i - 1] * x;
    yp[i] = yp[i - 1] * y;
  }
  Rational r = 0;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    auto [a, b] = monomial_exponents(i);
    r += c_[i] * xp[a] * yp[b];
  }
  return r;
}

Poly2 Poly2::dx() const {
  Poly2 p(std::max(deg_ - 1, 0));
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    auto [a, b] = monomial_exponents(i);
    if (a == 0) continue;
    p.c_[monomial_index(a - 1, b)] += Rational(a) * c_[i];
  }
  return p;
}

Poly2 Poly2::dy() const {
  Poly2 p(std::max(deg_ - 1, 0));
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    auto [a, b] = monomial_exponents(i);
    if (b == 0) continue;
    p.c_[monomial_index(a, b - 1)] += Rational(b) * c_[i];
  }
  return p;
}

Poly2 Poly2::directional_derivative(const Pt& n, int r) const {
  if (r < 0) throw InternalError("negative derivative order");
  Poly2 p = *this;
  for (int i = 0; i < r; ++i) p = p.dx() * n.x + p.dy() * n.y;
  return p;
}

Poly1 Poly2::restrict_to_line(const LineForm& l) const {
  Pt f = l.foot();
  Pt d = l.direction();
  Poly1 xt(std::vector<Rational>{f.x, d.x});
  Poly1 yt(std::vector<Rational>{f.y, d.y});
  std::vector<Poly1> xp(deg_ + 1), yp(deg_ + 1);
  xp[0] = Poly1::constant(1);
  yp[0] = Poly1::constant(1);
  for (int i = 1; i <= deg_; ++i) {
    xp[i] = xp[i - 1] * xt;
    yp[i] = yp[i - 1] * yt;
  }
  Poly1 r;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    auto [a, b] = monomial_exponents(i);
    r += (xp[a] * yp[b]) * c_[i];
  }
  return r;
}

namespace {

// One exact division step by a*x + b*y + c. The polynomial is viewed as a
// polynomial in the variable whose line coefficient is nonzero, with Poly1
// coefficients in the other variable.
std::optional<Poly2> divide_once(const Poly2& p, const LineForm& l) {
  int deg = p.degree_bound();
  bool by_x = l.a() != 0;
  Rational lead = by_x ? l.a() : l.b();
  // s = the part of the divisor constant in the division variable.
  Poly1 s = by_x ? Poly1(std::vector<Rational>{l.c(), l.b()})
                 : Poly1(std::vector<Rational>{l.c()});
  // rows[i] = Poly1 coefficient of (division variable)^i.
  std::vector<Poly1> rows(deg + 1);
  for (int i = 0; i < static_cast<int>(p.coeffs().size()); ++i) {
    const Rational& v = p.coeffs()[i];
    if (v == 0) continue;
    auto [a, b] = monomial_exponents(i);
    int main = by_x ? a : b;
    int other = by_x ? b : a;
    std::vector<Rational> mono(other + 1);
    mono[other] = v;
    rows[main] += Poly1(std::move(mono));
  }
  int m = deg;
  while (m > 0 && rows[m].is_zero()) --m;
  if (m == 0) {
    if (rows[0].is_zero()) return Poly2(std::max(deg - 1, 0));
    return std::nullopt;
  }
  std::vector<Poly1> q(m);
  q[m - 1] = rows[m] * (Rational(1) / lead);
  for (int i = m - 1; i >= 1; --i)
    q[i - 1] = (rows[i] - s * q[i]) * (Rational(1) / lead);
  Poly1 rem = rows[0] - s * q[0];
  if (!rem.is_zero()) return std::nullopt;
  Poly2 out(std::max(deg - 1, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= q[i].degree(); ++j) {
      if (q[i].coeff(j) == 0) continue;
      if (by_x)
        out.set_coeff(i, j, q[i].coeff(j));
      else
        out.set_coeff(j, i, q[i].coeff(j));
    }
  return out;
}

}  // namespace

std::optional<Poly2> Poly2::divided_by_line_power(const LineForm& l,
                                                  int k) const {
  if (k < 0) throw InternalError("negative line power");
  Poly2 p = *this;
  for (int i = 0; i < k; ++i) {
    auto q = divide_once(p, l);
    if (!q) return std::nullopt;
    p = *q;
  }
  return p;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  int d = std::max(deg_, o.deg_);
  Poly2 r = promoted(d);
  for (int i = 0; i < static_cast<int>(o.c_.size()); ++i) r.c_[i] += o.c_[i];
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  int d = std::max(deg_, o.deg_);
  Poly2 r = promoted(d);
  for (int i = 0; i < static_cast<int>(o.c_.size()); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r(deg_ + o.deg_);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    auto [a1, b1] = monomial_exponents(i);
    for (int j = 0; j < static_cast<int>(o.c_.size()); ++j) {
      if (o.c_[j] == 0) continue;
      auto [a2, b2] = monomial_exponents(j);
      r.c_[monomial_index(a1 + a2, b1 + b2)] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Poly2 Poly2::operator*(const Rational& s) const {
  Poly2 r = *this;
  for (Rational& q : r.c_) q *= s;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  *this = *this + o;
  return *this;
}

bool Poly2::operator==(const Poly2& o) const {
  const Poly2& lo = deg_ <= o.deg_ ? *this : o;
  const Poly2& hi = deg_ <= o.deg_ ? o : *this;
  for (int i = 0; i < static_cast<int>(hi.c_.size()); ++i) {
    Rational v = i < static_cast<int>(lo.c_.size()) ? lo.c_[i] : Rational(0);
    if (v != hi.c_[i]) return false;
  }
  return true;
}

std::string Poly2::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    auto [a, b] = monomial_exponents(i);
    if (!first) os << " + ";
    os << rat_str(c_[i]);
    if (a) os << "*x^" << a;
    if (b) os << "*y^" << b;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace splinespace
