#pragma once

// Exact rational scalar type. Backed by GMP's mpq_class; every value is kept
// in canonical form (reduced fraction, positive denominator). All geometry,
// polynomial, and linear-algebra code in this library works over Rational;
// no floating point enters until final rendering.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace splinespace {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n", "-n", "n/d", "-n/d" with decimal digits and d > 0 after
// reduction. Anything else (including "1/0" and embedded whitespace) is
// rejected.
std::optional<Rational> rat_parse(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

double rat_double(const Rational& q);

inline int rat_sign(const Rational& q) { return sgn(q); }

}  // namespace splinespace
