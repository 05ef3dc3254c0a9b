#include "splinespace/partition.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "splinespace/errors.hpp"

namespace splinespace {

namespace {

// Exact CCW angular order of nonzero directions, starting just above the
// positive x axis.
int half_plane(const Pt& d) {
  if (d.y > 0 || (d.y == 0 && d.x > 0)) return 0;
  return 1;
}

bool dir_less(const Pt& d1, const Pt& d2) {
  int h1 = half_plane(d1), h2 = half_plane(d2);
  if (h1 != h2) return h1 < h2;
  return rat_sign(cross(d1, d2)) > 0;
}

template <typename T>
void rotate_to_min(std::vector<T>& loop) {
  auto it = std::min_element(loop.begin(), loop.end());
  std::rotate(loop.begin(), it, loop.end());
}

}  // namespace

Partition Partition::build(const std::vector<Pt>& pts,
                           const std::vector<std::pair<int, int>>& segs) {
  if (pts.empty() || segs.empty()) throw InvalidInput("empty partition input");
  {
    std::vector<Pt> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("duplicate vertex coordinates");
  }
  Partition p;
  p.v_ = pts;
  int n = static_cast<int>(pts.size());
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : segs) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InvalidInput("edge index out of range");
    if (i == j) throw InvalidInput("degenerate edge");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw InvalidInput("duplicate edge");
    p.e_.emplace_back(key.first, key.second,
                      LineForm::through(pts[key.first], pts[key.second]));
  }
  int m = static_cast<int>(p.e_.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const EdgeRec& e1 = p.e_[i];
      const EdgeRec& e2 = p.e_[j];
      SegIntersection hit = intersect_segments(pts[e1.a], pts[e1.b],
                                               pts[e2.a], pts[e2.b]);
      if (hit.kind == SegHit::None) continue;
      if (hit.kind == SegHit::Overlap)
        throw CrossingSegments("collinear edges overlap");
      bool shared = (hit.point == pts[e1.a] || hit.point == pts[e1.b]) &&
                    (hit.point == pts[e2.a] || hit.point == pts[e2.b]);
      if (!shared) throw CrossingSegments("edges meet off their endpoints");
    }
  p.vert_edges_.assign(n, {});
  for (int e = 0; e < m; ++e) {
    p.vert_edges_[p.e_[e].a].push_back(e);
    p.vert_edges_[p.e_[e].b].push_back(e);
  }
  for (int v = 0; v < n; ++v) {
    if (p.vert_edges_[v].empty()) throw InvalidInput("isolated vertex");
    if (p.vert_edges_[v].size() == 1)
      throw DanglingEdge("vertex with a single incident edge");
  }
  {
    std::vector<bool> vis(n, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : p.vert_edges_[v]) {
        int w = p.e_[e].a == v ? p.e_[e].b : p.e_[e].a;
        if (!vis[w]) {
          vis[w] = true;
          q.push(w);
        }
      }
    }
    if (std::find(vis.begin(), vis.end(), false) != vis.end())
      throw NotSimplyConnected("partition graph is disconnected");
  }
  p.extract_faces();
  p.group_maximal_segments();
  return p;
}

void Partition::extract_faces() {
  int E = static_cast<int>(e_.size());
  int H = 2 * E;
  auto src = [&](int h) { return h % 2 ? e_[h / 2].b : e_[h / 2].a; };
  auto dst = [&](int h) { return h % 2 ? e_[h / 2].a : e_[h / 2].b; };

  std::vector<std::vector<int>> out(v_.size());
  for (int h = 0; h < H; ++h) out[src(h)].push_back(h);
  for (auto& o : out)
    std::sort(o.begin(), o.end(), [&](int h1, int h2) {
      return dir_less(v_[dst(h1)] - v_[src(h1)], v_[dst(h2)] - v_[src(h2)]);
    });
  std::vector<int> pos(H);
  for (auto& o : out)
    for (int k = 0; k < static_cast<int>(o.size()); ++k) pos[o[k]] = k;
  // Faces are traced counter-clockwise: the successor of u->v is the
  // angular predecessor of v->u around v, which keeps the face interior on
  // the left.
  auto next = [&](int h) {
    const auto& o = out[dst(h)];
    int k = pos[h ^ 1];
    return o[(k + o.size() - 1) % o.size()];
  };

  struct FaceInfo {
    std::vector<int> verts;
    std::vector<int> hedges;
    Rational area2;
  };
  std::vector<FaceInfo> faces;
  std::vector<int> face_of(H, -1);
  for (int h0 = 0; h0 < H; ++h0) {
    if (face_of[h0] >= 0) continue;
    FaceInfo fi;
    int h = h0;
    do {
      face_of[h] = static_cast<int>(faces.size());
      fi.hedges.push_back(h);
      fi.verts.push_back(src(h));
      h = next(h);
    } while (h != h0);
    Rational a2 = 0;
    int k = static_cast<int>(fi.verts.size());
    for (int i = 0; i < k; ++i)
      a2 += cross(v_[fi.verts[i]], v_[fi.verts[(i + 1) % k]]);
    fi.area2 = a2;
    faces.push_back(std::move(fi));
  }

  int outer = -1;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    std::vector<int> edge_ids;
    for (int h : faces[f].hedges) edge_ids.push_back(h / 2);
    std::sort(edge_ids.begin(), edge_ids.end());
    if (std::adjacent_find(edge_ids.begin(), edge_ids.end()) !=
        edge_ids.end())
      throw DanglingEdge("edge bounds the same face on both sides");
    if (faces[f].area2 == 0) throw InternalError("degenerate face");
    if (faces[f].area2 < 0) {
      if (outer >= 0)
        throw NotSimplyConnected("more than one unbounded face walk");
      outer = f;
    }
  }
  if (outer < 0) throw OpenBoundary("no closed outer boundary");
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    std::vector<int> vs = faces[f].verts;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
      if (f == outer)
        throw OpenBoundary("domain boundary touches itself");
      throw NotSimplyConnected("cell boundary touches itself");
    }
  }

  std::vector<int> cell_of_face(faces.size(), -1);
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (f == outer) continue;
    cell_of_face[f] = static_cast<int>(cells_.size());
    std::vector<int> loop = faces[f].verts;
    rotate_to_min(loop);
    cells_.push_back(std::move(loop));
  }

  boundary_ = faces[outer].verts;
  std::reverse(boundary_.begin(), boundary_.end());
  rotate_to_min(boundary_);
  on_boundary_.assign(v_.size(), false);
  for (int v : boundary_) on_boundary_[v] = true;

  if (static_cast<int>(v_.size()) - E + (static_cast<int>(cells_.size()) + 1) !=
      2)
    throw InternalError("Euler characteristic violated");

  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (f == outer) continue;
    for (int h : faces[f].hedges) {
      EdgeRec& e = e_[h / 2];
      Pt d = v_[dst(h)] - v_[src(h)];
      int s = rat_sign(e.line.b() * d.x - e.line.a() * d.y);
      if (s > 0)
        e.cell_pos = cell_of_face[f];
      else
        e.cell_neg = cell_of_face[f];
    }
  }
  for (const EdgeRec& e : e_)
    if (e.cell_pos < 0 && e.cell_neg < 0)
      throw InternalError("edge with no incident cell");
}

void Partition::group_maximal_segments() {
  std::map<LineForm, std::vector<int>> by_line;
  for (int e = 0; e < static_cast<int>(e_.size()); ++e)
    if (!is_boundary_edge(e)) by_line[e_[e].line].push_back(e);

  for (auto& [line, ids] : by_line) {
    Pt dir = line.direction();
    auto param = [&](int v) { return dot(v_[v], dir); };
    auto lo_vertex = [&](int e) {
      return param(e_[e].a) < param(e_[e].b) ? e_[e].a : e_[e].b;
    };
    auto hi_vertex = [&](int e) {
      return param(e_[e].a) < param(e_[e].b) ? e_[e].b : e_[e].a;
    };
    std::sort(ids.begin(), ids.end(), [&](int x, int y) {
      return param(lo_vertex(x)) < param(lo_vertex(y));
    });
    std::size_t i = 0;
    while (i < ids.size()) {
      MaximalSegment seg(line);
      seg.edges.push_back(ids[i]);
      std::size_t j = i;
      while (j + 1 < ids.size() &&
             lo_vertex(ids[j + 1]) == hi_vertex(ids[j])) {
        ++j;
        seg.edges.push_back(ids[j]);
      }
      int va = lo_vertex(ids[i]);
      int vb = hi_vertex(ids[j]);
      seg.end_a = std::min(v_[va], v_[vb]);
      seg.end_b = std::max(v_[va], v_[vb]);
      bool ba = on_boundary_[va], bb = on_boundary_[vb];
      seg.cls = ba && bb ? SegmentClass::CrossCut
                         : (ba || bb ? SegmentClass::Ray
                                     : SegmentClass::Interior);
      int sid = static_cast<int>(segs_.size());
      for (int e : seg.edges) e_[e].segment = sid;
      segs_.push_back(std::move(seg));
      i = j + 1;
    }
  }

  bool all_cc = true, all_cc_or_ray = true;
  for (const MaximalSegment& s : segs_) {
    if (s.cls != SegmentClass::CrossCut) all_cc = false;
    if (s.cls == SegmentClass::Interior) all_cc_or_ray = false;
  }
  class_ = all_cc ? PartitionClass::CrossCutPartition
                  : (all_cc_or_ray ? PartitionClass::QuasiCrossCutPartition
                                   : PartitionClass::General);
}

Partition Partition::build_arrangement(
    const std::vector<Pt>& pts, const std::vector<std::pair<int, int>>& segs) {
  if (pts.empty() || segs.empty()) throw InvalidInput("empty partition input");
  int n = static_cast<int>(pts.size());
  std::vector<std::pair<Pt, Pt>> ss;
  for (auto [i, j] : segs) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InvalidInput("edge index out of range");
    if (pts[i] == pts[j]) throw InvalidInput("degenerate edge");
    ss.emplace_back(pts[i], pts[j]);
  }
  std::vector<Pt> pool = pts;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      SegIntersection hit = intersect_segments(ss[i].first, ss[i].second,
                                               ss[j].first, ss[j].second);
      if (hit.kind == SegHit::Point) pool.push_back(hit.point);
      if (hit.kind == SegHit::Overlap) {
        pool.push_back(hit.overlap_a);
        pool.push_back(hit.overlap_b);
      }
    }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  auto index_of = [&](const Pt& p) {
    return static_cast<int>(
        std::lower_bound(pool.begin(), pool.end(), p) - pool.begin());
  };
  std::set<std::pair<int, int>> edges;
  for (const auto& [a, b] : ss) {
    Pt d = b - a;
    std::vector<std::pair<Rational, int>> on;
    for (int k = 0; k < static_cast<int>(pool.size()); ++k)
      if (on_segment(pool[k], a, b)) on.emplace_back(dot(pool[k] - a, d), k);
    std::sort(on.begin(), on.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 0; k + 1 < on.size(); ++k)
      edges.insert(std::minmax(on[k].second, on[k + 1].second));
  }
  return build(pool, {edges.begin(), edges.end()});
}

bool Partition::is_boundary_edge(int e) const {
  return e_[e].cell_pos < 0 || e_[e].cell_neg < 0;
}

std::vector<int> Partition::interior_edges() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(e_.size()); ++e)
    if (!is_boundary_edge(e)) out.push_back(e);
  return out;
}

std::vector<int> Partition::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(v_.size()); ++v)
    if (!on_boundary_[v]) out.push_back(v);
  return out;
}

int Partition::distinct_lines_at(int v) const {
  std::set<LineForm> lines;
  for (int e : vert_edges_[v]) lines.insert(e_[e].line);
  return static_cast<int>(lines.size());
}

Rational Partition::cell_area(int c) const {
  const std::vector<int>& loop = cells_[c];
  Rational a2 = 0;
  int k = static_cast<int>(loop.size());
  for (int i = 0; i < k; ++i)
    a2 += cross(v_[loop[i]], v_[loop[(i + 1) % k]]);
  return a2 / 2;
}

Pt Partition::cell_interior_point(int c) const {
  const std::vector<int>& loop = cells_[c];
  int k = static_cast<int>(loop.size());
  int bi = 0;
  for (int i = 1; i < k; ++i)
    if (v_[loop[i]] < v_[loop[bi]]) bi = i;
  // The lexicographic minimum is a strictly convex corner.
  Pt a = v_[loop[(bi + k - 1) % k]];
  Pt b = v_[loop[bi]];
  Pt cpt = v_[loop[(bi + 1) % k]];
  LineForm ac = LineForm::through(a, cpt);
  auto inside_closed = [&](const Pt& q) {
    return orient(a, b, q) >= 0 && orient(b, cpt, q) >= 0 &&
           orient(cpt, a, q) >= 0;
  };
  bool found = false;
  Pt best;
  Rational best_dist;
  for (int i = 0; i < k; ++i) {
    const Pt& q = v_[loop[i]];
    if (q == a || q == b || q == cpt) continue;
    if (!inside_closed(q)) continue;
    Rational dist = abs(ac.eval(q));
    if (!found || dist > best_dist ||
        (dist == best_dist && q < best)) {
      found = true;
      best = q;
      best_dist = dist;
    }
  }
  if (!found) return rat(1, 3) * (a + b + cpt);
  return rat(1, 2) * (b + best);
}

bool Partition::domain_convex() const {
  int k = static_cast<int>(boundary_.size());
  for (int i = 0; i < k; ++i) {
    const Pt& a = v_[boundary_[(i + k - 1) % k]];
    const Pt& b = v_[boundary_[i]];
    const Pt& c = v_[boundary_[(i + 1) % k]];
    if (orient(a, b, c) < 0) return false;
  }
  return true;
}

Locate Partition::locate(const Pt& p) const {
  Locate r;
  for (int e = 0; e < static_cast<int>(e_.size()); ++e)
    if (on_segment(p, v_[e_[e].a], v_[e_[e].b])) {
      r.kind = Locate::Kind::OnEdge;
      r.edge = e;
      return r;
    }
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c) {
    const std::vector<int>& loop = cells_[c];
    int k = static_cast<int>(loop.size());
    bool in = false;
    for (int i = 0; i < k; ++i) {
      const Pt& u = v_[loop[i]];
      const Pt& w = v_[loop[(i + 1) % k]];
      if ((u.y <= p.y) == (w.y <= p.y)) continue;
      // x coordinate where the edge crosses the horizontal through p;
      // p is never on an edge here, so strict comparison is safe.
      Rational xint = u.x + (p.y - u.y) / (w.y - u.y) * (w.x - u.x);
      if (xint > p.x) in = !in;
    }
    if (in) {
      r.kind = Locate::Kind::Cell;
      r.cell = c;
      return r;
    }
  }
  return r;
}

int Partition::cell_across(int e, int c) const {
  if (e_[e].cell_pos == c) return e_[e].cell_neg;
  if (e_[e].cell_neg == c) return e_[e].cell_pos;
  throw InternalError("cell not incident to edge");
}

std::vector<DualStep> Partition::dual_spanning_tree(int source) const {
  int nc = static_cast<int>(cells_.size());
  if (source < 0 || source >= nc)
    throw IndexOutOfRange("source cell out of range");
  std::vector<std::vector<std::pair<int, int>>> adj(nc);  // (neighbor, edge)
  for (int e = 0; e < static_cast<int>(e_.size()); ++e) {
    if (is_boundary_edge(e)) continue;
    adj[e_[e].cell_pos].emplace_back(e_[e].cell_neg, e);
    adj[e_[e].cell_neg].emplace_back(e_[e].cell_pos, e);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<DualStep> steps(nc);
  std::vector<bool> vis(nc, false);
  std::queue<int> q;
  q.push(source);
  vis[source] = true;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (auto [w, e] : adj[c]) {
      if (vis[w]) continue;
      vis[w] = true;
      steps[w].parent = c;
      steps[w].edge = e;
      q.push(w);
    }
  }
  if (std::find(vis.begin(), vis.end(), false) != vis.end())
    throw InternalError("dual graph disconnected");
  return steps;
}

std::pair<std::vector<SegmentClass>, PartitionClass> classify_segments(
    const Partition& p) {
  std::vector<SegmentClass> cls;
  for (const MaximalSegment& s : p.maximal_segments()) cls.push_back(s.cls);
  return {cls, p.partition_class()};
}

}  // namespace splinespace
