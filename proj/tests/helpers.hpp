#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "splinespace/io.hpp"
#include "splinespace/partition.hpp"

namespace sstest {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline splinespace::Partition load_fixture(const std::string& name) {
  splinespace::PartitionInput in =
      splinespace::read_partition_file(fixture_path(name));
  return splinespace::Partition::build(in.vertices, in.edges);
}

// Cell id whose vertex loop is exactly `verts` (order-insensitive); -1 if none.
inline int cell_with_vertices(const splinespace::Partition& p,
                              std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  for (int c = 0; c < static_cast<int>(p.cells().size()); ++c) {
    std::vector<int> loop = p.cells()[c];
    std::sort(loop.begin(), loop.end());
    if (loop == verts) return c;
  }
  return -1;
}

inline int vertex_at(const splinespace::Partition& p, const splinespace::Pt& q) {
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
    if (p.vertices()[v] == q) return v;
  return -1;
}

inline splinespace::Rational rq(const std::string& s) {
  auto r = splinespace::rat_parse(s);
  if (!r) throw std::runtime_error("bad rational in test: " + s);
  return *r;
}

inline splinespace::Pt pt(const std::string& x, const std::string& y) {
  return splinespace::Pt(rq(x), rq(y));
}

}  // namespace sstest
