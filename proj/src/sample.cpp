#include "splinespace/sample.hpp"

#include <cstdio>
#include <optional>

#include "splinespace/errors.hpp"

namespace splinespace {

namespace {

struct Box {
  Rational xmin, xmax, ymin, ymax;
};

Box bounding_box(const Partition& p) {
  const auto& vs = p.vertices();
  Box b{vs[0].x, vs[0].x, vs[0].y, vs[0].y};
  for (const Pt& v : vs) {
    if (v.x < b.xmin) b.xmin = v.x;
    if (b.xmax < v.x) b.xmax = v.x;
    if (v.y < b.ymin) b.ymin = v.y;
    if (b.ymax < v.y) b.ymax = v.y;
  }
  return b;
}

// Value of s at p when p lies in the closed domain.
std::optional<Rational> value_at(const Spline& s, const Pt& p) {
  Locate loc = s.part->locate(p);
  if (loc.kind == Locate::Kind::Outside) return std::nullopt;
  int cell;
  if (loc.kind == Locate::Kind::Cell) {
    cell = loc.cell;
  } else {
    const auto& er = s.part->edges()[static_cast<std::size_t>(loc.edge)];
    cell = er.cell_pos >= 0 ? er.cell_pos : er.cell_neg;
  }
  return s.cell_polys[static_cast<std::size_t>(cell)].eval(p.x, p.y);
}

Pt lattice_point(const Box& b, int n, int i, int j) {
  Rational fx = Rational(i) / Rational(n - 1);
  Rational fy = Rational(j) / Rational(n - 1);
  return Pt{b.xmin + (b.xmax - b.xmin) * fx, b.ymin + (b.ymax - b.ymin) * fy};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<GridSample> sample_grid_serial(const Spline& s, int n) {
  if (n < 2) throw InvalidInput("grid needs at least 2 points per side");
  Box b = bounding_box(*s.part);
  std::vector<GridSample> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Pt p = lattice_point(b, n, i, j);
      auto v = value_at(s, p);
      if (v) out.push_back(GridSample{p.x, p.y, *v});
    }
  }
  return out;
}

std::vector<GridSample> sample_grid(const Spline& s, int n) {
  if (n < 2) throw InvalidInput("grid needs at least 2 points per side");
  Box b = bounding_box(*s.part);
  // One preallocated slot per lattice point keeps the output order identical
  // to the serial reference regardless of thread scheduling.
  std::vector<std::optional<GridSample>> slots(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      Pt p = lattice_point(b, n, i, j);
      auto v = value_at(s, p);
      if (v) {
        slots[static_cast<std::size_t>(j) * n + i] = GridSample{p.x, p.y, *v};
      }
    }
  }
  std::vector<GridSample> out;
  out.reserve(slots.size());
  for (auto& slot : slots) {
    if (slot) out.push_back(std::move(*slot));
  }
  return out;
}

std::string sample_csv(const std::vector<GridSample>& rows) {
  std::string out = "x,y,value\n";
  for (const GridSample& r : rows) {
    out += format_double(rat_double(r.x));
    out += ',';
    out += format_double(rat_double(r.y));
    out += ',';
    out += format_double(rat_double(r.value));
    out += '\n';
  }
  return out;
}

namespace {

struct Rgb {
  int r, g, b;
  bool operator==(const Rgb& o) const { return r == o.r && g == o.g && b == o.b; }
};

Rgb ramp(double t) {
  // Two-stop linear map, cool blue to warm red.
  const double lo[3] = {59, 76, 192};
  const double hi[3] = {180, 4, 38};
  auto ch = [&](int k) {
    double v = lo[k] + (hi[k] - lo[k]) * t;
    int iv = static_cast<int>(v + 0.5);
    if (iv < 0) iv = 0;
    if (iv > 255) iv = 255;
    return iv;
  };
  return Rgb{ch(0), ch(1), ch(2)};
}

std::string f4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Spline& s, int resolution) {
  if (resolution < 2) throw InvalidInput("resolution too small");
  const Box b = bounding_box(*s.part);
  const Rational w = b.xmax - b.xmin;
  const Rational h = b.ymax - b.ymin;

  // Exact pixel-centre values first; colors afterwards.
  std::vector<std::optional<Rational>> values(
      static_cast<std::size_t>(resolution) * resolution);
#pragma omp parallel for schedule(static)
  for (int py = 0; py < resolution; ++py) {
    for (int px = 0; px < resolution; ++px) {
      Rational fx = (Rational(2 * px + 1)) / Rational(2 * resolution);
      // SVG y grows downward; flip so the domain's ymax is the top row.
      Rational fy = (Rational(2 * (resolution - 1 - py) + 1)) / Rational(2 * resolution);
      Pt p{b.xmin + w * fx, b.ymin + h * fy};
      values[static_cast<std::size_t>(py) * resolution + px] = value_at(s, p);
    }
  }

  bool any = false;
  Rational vmin(0), vmax(0);
  for (const auto& v : values) {
    if (!v) continue;
    if (!any) {
      vmin = vmax = *v;
      any = true;
    } else {
      if (*v < vmin) vmin = *v;
      if (vmax < *v) vmax = *v;
    }
  }
  const bool flat = !any || vmin == vmax;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(resolution) + "\" height=\"" + std::to_string(resolution) +
         "\" viewBox=\"0 0 " + std::to_string(resolution) + " " +
         std::to_string(resolution) + "\">\n";

  // Heatmap: run-length merge equal-colored horizontal pixel runs.
  for (int py = 0; py < resolution; ++py) {
    int run_start = -1;
    Rgb run_color{0, 0, 0};
    auto flush = [&](int end) {
      if (run_start < 0) return;
      svg += "<rect x=\"" + std::to_string(run_start) + "\" y=\"" + std::to_string(py) +
             "\" width=\"" + std::to_string(end - run_start) +
             "\" height=\"1\" fill=\"rgb(" + std::to_string(run_color.r) + "," +
             std::to_string(run_color.g) + "," + std::to_string(run_color.b) + ")\"/>\n";
      run_start = -1;
    };
    for (int px = 0; px < resolution; ++px) {
      const auto& v = values[static_cast<std::size_t>(py) * resolution + px];
      if (!v) {
        flush(px);
        continue;
      }
      double t = flat ? 0.5 : rat_double((*v - vmin) / (vmax - vmin));
      Rgb c = ramp(t);
      if (run_start >= 0 && c == run_color) continue;
      flush(px);
      run_start = px;
      run_color = c;
    }
    flush(resolution);
  }

  // Cell outlines on top.
  auto sx = [&](const Rational& x) {
    return rat_double((x - b.xmin) / w) * resolution;
  };
  auto sy = [&](const Rational& y) {
    return (1.0 - rat_double((y - b.ymin) / h)) * resolution;
  };
  for (const auto& loop : s.part->cells()) {
    svg += "<polygon points=\"";
    for (std::size_t k = 0; k < loop.size(); ++k) {
      const Pt& v = s.part->vertices()[static_cast<std::size_t>(loop[k])];
      if (k) svg += ' ';
      svg += f4(sx(v.x)) + "," + f4(sy(v.y));
    }
    svg += "\" fill=\"none\" stroke=\"#101010\" stroke-width=\"1\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace splinespace
