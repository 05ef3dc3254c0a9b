#pragma once

#include <utility>
#include <vector>

#include "splinespace/geometry.hpp"
#include "splinespace/poly.hpp"

namespace splinespace {

enum class SegmentClass { CrossCut, Ray, Interior };
enum class PartitionClass { CrossCutPartition, QuasiCrossCutPartition, General };

struct EdgeRec {
  int a, b;  // endpoint vertex ids, a < b
  LineForm line;
  int cell_pos = -1;  // cell on the positive side of line, -1 if outer
  int cell_neg = -1;
  int segment = -1;  // maximal segment id, -1 for boundary edges

  EdgeRec(int va, int vb, LineForm l) : a(va), b(vb), line(std::move(l)) {}
};

// Maximal run of contiguous collinear interior edges.
struct MaximalSegment {
  LineForm line;
  std::vector<int> edges;  // ordered along the line direction
  Pt end_a, end_b;         // extreme endpoints, end_a < end_b
  SegmentClass cls = SegmentClass::Interior;

  explicit MaximalSegment(LineForm l) : line(std::move(l)) {}
};

struct DualStep {
  int parent = -1;  // parent cell in the spanning tree, -1 at the source
  int edge = -1;    // interior edge crossed from parent
};

struct Locate {
  enum class Kind { Cell, OnEdge, Outside };
  Kind kind = Kind::Outside;
  int cell = -1;
  int edge = -1;
};

class Partition {
 public:
  // Strict construction: segments must meet only at shared endpoints.
  static Partition build(const std::vector<Pt>& pts,
                         const std::vector<std::pair<int, int>>& segs);
  // Arrangement construction: segments may cross, touch, or overlap; they
  // are subdivided at every incidence first. Vertex order is lexicographic.
  static Partition build_arrangement(
      const std::vector<Pt>& pts,
      const std::vector<std::pair<int, int>>& segs);

  const std::vector<Pt>& vertices() const { return v_; }
  const std::vector<EdgeRec>& edges() const { return e_; }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& boundary_loop() const { return boundary_; }
  const std::vector<MaximalSegment>& maximal_segments() const { return segs_; }
  PartitionClass partition_class() const { return class_; }

  bool is_boundary_edge(int e) const;
  bool is_boundary_vertex(int v) const { return on_boundary_[v]; }
  const std::vector<int>& edges_at_vertex(int v) const {
    return vert_edges_[v];
  }
  std::vector<int> interior_edges() const;
  std::vector<int> interior_vertices() const;
  int distinct_lines_at(int v) const;

  Rational cell_area(int c) const;
  Pt cell_interior_point(int c) const;
  bool domain_convex() const;
  Locate locate(const Pt& p) const;
  int cell_across(int e, int c) const;
  std::vector<DualStep> dual_spanning_tree(int source) const;

 private:
  Partition() = default;
  void extract_faces();
  void group_maximal_segments();

  std::vector<Pt> v_;
  std::vector<EdgeRec> e_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> boundary_;
  std::vector<MaximalSegment> segs_;
  std::vector<std::vector<int>> vert_edges_;
  std::vector<bool> on_boundary_;
  PartitionClass class_ = PartitionClass::General;
};

// Per-maximal-segment classes plus the overall partition class.
std::pair<std::vector<SegmentClass>, PartitionClass> classify_segments(
    const Partition& p);

}  // namespace splinespace
