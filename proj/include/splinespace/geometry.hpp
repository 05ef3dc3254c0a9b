#pragma once

#include <optional>
#include <utility>

#include "splinespace/rational.hpp"

namespace splinespace {

struct Pt {
  Rational x;
  Rational y;

  Pt() : x(0), y(0) {}
  Pt(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
  // Lexicographic by x, then y. Used wherever a deterministic point order is
  // needed (vertex tables, sweep order along a line).
  bool operator<(const Pt& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

Pt operator+(const Pt& a, const Pt& b);
Pt operator-(const Pt& a, const Pt& b);
Pt operator*(const Rational& s, const Pt& p);

Rational cross(const Pt& a, const Pt& b);
Rational dot(const Pt& a, const Pt& b);

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear.
int orient(const Pt& a, const Pt& b, const Pt& c);

// p lies on the closed segment [a, b].
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

// p lies strictly inside the open segment (a, b).
bool strictly_inside_segment(const Pt& p, const Pt& a, const Pt& b);

enum class SegHit { None, Point, Overlap };

struct SegIntersection {
  SegHit kind = SegHit::None;
  Pt point;        // valid when kind == Point
  Pt overlap_a;    // valid when kind == Overlap; overlap_a < overlap_b
  Pt overlap_b;
};

// Exact intersection of closed segments [a,b] and [c,d]. Degenerate
// (zero-length) segments are treated as points. Collinear contact of
// positive length reports Overlap; a single shared point reports Point.
SegIntersection intersect_segments(const Pt& a, const Pt& b, const Pt& c,
                                   const Pt& d);

}  // namespace splinespace
