#pragma once

// Grid sampling and SVG heatmap rendering of splines.  Sampling is exact
// (rational lattice points, rational values); floating point appears only
// when formatting CSV text or SVG colors.  The parallel sampler must produce
// output identical to the serial reference — tests and the benchmark hold it
// to that.

#include <string>
#include <vector>

#include "splinespace/conformality.hpp"

namespace splinespace {

struct GridSample {
  Rational x, y, value;
  bool operator==(const GridSample& o) const {
    return x == o.x && y == o.y && value == o.value;
  }
};

// Samples s on an n-by-n lattice spanning the bounding box of its partition
// (endpoints included; n >= 2).  Lattice points outside the domain are
// skipped; rows are emitted in row-major order, y varying last.
std::vector<GridSample> sample_grid_serial(const Spline& s, int n);

// Same contract and same output, computed with OpenMP when available.
std::vector<GridSample> sample_grid(const Spline& s, int n);

// "x,y,value" header plus one decimal-rendered row per sample.
std::string sample_csv(const std::vector<GridSample>& rows);

// Standalone SVG heatmap: pixel-centre sampling at the given resolution,
// linear two-colour map over the observed min/max, cells outlined as
// polygons.  Exact arithmetic up to the colour ramp.
std::string render_svg(const Spline& s, int resolution = 256);

}  // namespace splinespace
