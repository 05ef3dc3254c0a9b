#include "splinespace/extend.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "splinespace/errors.hpp"

namespace splinespace {

namespace {

Pt primitive_direction(const Pt& d) {
  mpz_class l = lcm(d.x.get_den(), d.y.get_den());
  mpz_class ix = d.x.get_num() * (l / d.x.get_den());
  mpz_class iy = d.y.get_num() * (l / d.y.get_den());
  mpz_class g = gcd(ix, iy);
  return Pt(Rational(ix / g), Rational(iy / g));
}

// First boundary point hit by the ray from an interior point.
Pt boundary_hit(const Partition& p, const Pt& from, const Pt& dir) {
  std::optional<Rational> best;
  for (int e = 0; e < static_cast<int>(p.edges().size()); ++e) {
    if (!p.is_boundary_edge(e)) continue;
    const Pt& u = p.vertices()[p.edges()[e].a];
    const Pt& w = p.vertices()[p.edges()[e].b];
    Rational denom = cross(dir, w - u);
    if (denom == 0) continue;  // parallel; boundary is never collinear here
    Rational t = cross(u - from, w - u) / denom;
    Rational s = cross(u - from, dir) / denom;
    if (t <= 0 || s < 0 || s > 1) continue;
    if (!best || t < *best) best = t;
  }
  if (!best) throw InternalError("extension ray missed the boundary");
  return from + *best * dir;
}

// Distinct points where the open segment (from, to) meets existing edges.
int crossing_count(const Partition& p, const Pt& from, const Pt& to) {
  std::set<Pt> points;
  auto note = [&](const Pt& q) {
    if (q != from && q != to) points.insert(q);
  };
  for (const EdgeRec& e : p.edges()) {
    SegIntersection hit = intersect_segments(from, to, p.vertices()[e.a],
                                             p.vertices()[e.b]);
    if (hit.kind == SegHit::Point) note(hit.point);
    if (hit.kind == SegHit::Overlap) {
      note(hit.overlap_a);
      note(hit.overlap_b);
    }
  }
  return static_cast<int>(points.size());
}

Partition add_segment(const Partition& p, const Pt& from, const Pt& to) {
  std::vector<Pt> pts = p.vertices();
  std::vector<std::pair<int, int>> segs;
  for (const EdgeRec& e : p.edges()) segs.emplace_back(e.a, e.b);
  auto idx = [&](const Pt& q) {
    auto it = std::find(pts.begin(), pts.end(), q);
    if (it != pts.end()) return static_cast<int>(it - pts.begin());
    pts.push_back(q);
    return static_cast<int>(pts.size()) - 1;
  };
  int i = idx(from);
  int j = idx(to);
  segs.emplace_back(i, j);
  return Partition::build_arrangement(pts, segs);
}

struct Target {
  LineForm line;
  Pt end_a, end_b;  // lexicographic order
  bool a_on_boundary = false, b_on_boundary = false;
};

std::optional<Target> pick_target(const Partition& p, ExtendStrategy strat) {
  std::optional<Target> best;
  for (const MaximalSegment& seg : p.maximal_segments()) {
    bool needs = strat == ExtendStrategy::Qcc
                     ? seg.cls == SegmentClass::Interior
                     : seg.cls != SegmentClass::CrossCut;
    if (!needs) continue;
    if (best && !(seg.line < best->line ||
                  (seg.line == best->line && seg.end_a < best->end_a)))
      continue;
    // Extreme endpoints are partition vertices; look up their boundary flag.
    auto on_bd = [&](const Pt& q) {
      for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
        if (p.vertices()[v] == q) return p.is_boundary_vertex(v);
      throw InternalError("segment endpoint is not a vertex");
    };
    best = Target{seg.line, seg.end_a, seg.end_b, on_bd(seg.end_a),
                  on_bd(seg.end_b)};
  }
  return best;
}

}  // namespace

ExtendedPartition extend_partition(const Partition& base, ExtendStrategy strat) {
  if (!base.domain_convex()) throw NonConvexDomain("domain is not convex");
  Partition cur = base;
  int steps = 0;
  int guard = 4 * static_cast<int>(base.maximal_segments().size()) + 16;
  while (auto t = pick_target(cur, strat)) {
    if (--guard < 0) throw InternalError("extension did not terminate");
    Pt from, dir;
    if (strat == ExtendStrategy::Qcc) {
      // Interior segment: pick the direction whose extension crosses fewer
      // existing edges, ties to the lexicographically smaller direction.
      Pt da = primitive_direction(t->end_a - t->end_b);
      Pt db = primitive_direction(t->end_b - t->end_a);
      Pt ha = boundary_hit(cur, t->end_a, da);
      Pt hb = boundary_hit(cur, t->end_b, db);
      int ca = crossing_count(cur, t->end_a, ha);
      int cb = crossing_count(cur, t->end_b, hb);
      bool use_a = ca != cb ? ca < cb : da < db;
      from = use_a ? t->end_a : t->end_b;
      dir = use_a ? da : db;
    } else {
      // Extend the lexicographically first endpoint still off the boundary.
      bool use_a = !t->a_on_boundary;
      from = use_a ? t->end_a : t->end_b;
      dir = primitive_direction(use_a ? t->end_a - t->end_b
                                      : t->end_b - t->end_a);
    }
    Pt hit = boundary_hit(cur, from, dir);
    cur = add_segment(cur, from, hit);
    ++steps;
  }
  std::vector<int> added;
  for (int e = 0; e < static_cast<int>(cur.edges().size()); ++e) {
    const Pt& a = cur.vertices()[cur.edges()[e].a];
    const Pt& b = cur.vertices()[cur.edges()[e].b];
    bool contained = false;
    for (const EdgeRec& be : base.edges()) {
      const Pt& u = base.vertices()[be.a];
      const Pt& w = base.vertices()[be.b];
      if (on_segment(a, u, w) && on_segment(b, u, w)) {
        contained = true;
        break;
      }
    }
    if (!contained) added.push_back(e);
  }
  return ExtendedPartition{base, std::move(cur), std::move(added), steps};
}

ExtendedPartition extend_to_qcc(const Partition& p) {
  return extend_partition(p, ExtendStrategy::Qcc);
}

ExtendedPartition extend_to_crosscut(const Partition& p) {
  return extend_partition(p, ExtendStrategy::CrossCut);
}

}  // namespace splinespace
