#include "splinespace/geometry.hpp"

#include <algorithm>

namespace splinespace {

Pt operator+(const Pt& a, const Pt& b) { return Pt(a.x + b.x, a.y + b.y); }
Pt operator-(const Pt& a, const Pt& b) { return Pt(a.x - b.x, a.y - b.y); }
Pt operator*(const Rational& s, const Pt& p) { return Pt(s * p.x, s * p.y); }

Rational cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

int orient(const Pt& a, const Pt& b, const Pt& c) {
  return rat_sign(cross(b - a, c - a));
}

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool strictly_inside_segment(const Pt& p, const Pt& a, const Pt& b) {
  return on_segment(p, a, b) && p != a && p != b;
}

namespace {

// Collinear case: intersect the two 1-dimensional ranges along the line.
SegIntersection collinear_hit(Pt a, Pt b, Pt c, Pt d) {
  if (b < a) std::swap(a, b);
  if (d < c) std::swap(c, d);
  Pt lo = std::max(a, c);
  Pt hi = std::min(b, d);
  SegIntersection out;
  if (hi < lo) return out;
  if (lo == hi) {
    out.kind = SegHit::Point;
    out.point = lo;
    return out;
  }
  out.kind = SegHit::Overlap;
  out.overlap_a = lo;
  out.overlap_b = hi;
  return out;
}

}  // namespace

SegIntersection intersect_segments(const Pt& a, const Pt& b, const Pt& c,
                                   const Pt& d) {
  SegIntersection out;
  Pt r = b - a;
  Pt s = d - c;
  Rational denom = cross(r, s);
  if (denom == 0) {
    bool collinear;
    if (a != b)
      collinear = orient(a, b, c) == 0 && orient(a, b, d) == 0;
    else if (c != d)
      collinear = orient(c, d, a) == 0;
    else
      collinear = true;  // two points
    if (!collinear) return out;
    return collinear_hit(a, b, c, d);
  }
  Rational t = cross(c - a, s) / denom;
  Rational u = cross(c - a, r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return out;
  out.kind = SegHit::Point;
  out.point = a + t * r;
  return out;
}

}  // namespace splinespace
