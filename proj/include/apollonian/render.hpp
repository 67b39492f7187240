#pragma once

// Deterministic SVG output. Model y points up; the SVG group flips it.

#include "apollonian/gasket.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace apollonian {

enum class ColorRule { ByLevel, ByResidue, Monochrome };

struct Viewport {
  double cx = 0, cy = 0;
  double half_width = 1;
};

struct RenderSpec {
  int width = 800, height = 800;
  std::optional<Viewport> viewport;  // derived from the input when absent
  double stroke_scale = 0.02;        // stroke width as a fraction of the radius in pixels
  double min_stroke = 0.1;
  double min_radius = 0;             // model units; smaller circles are dropped
  ColorRule color = ColorRule::ByLevel;
  int residue_modulus = 24;
};

struct RenderItem {
  GeneralizedCircle circle;
  int level = 0;
  Rational curvature;
};

inline std::vector<RenderItem> render_items(const Gasket& g) {
  std::vector<RenderItem> out;
  out.reserve(g.records.size());
  for (const auto& r : g.records) out.push_back({g.circle(r), r.level, r.curvature});
  return out;
}

namespace detail {
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline std::string palette(int i) {
  static const char* colors[] = {"#1b1b1b", "#c0392b", "#2e86c1", "#229954", "#d68910", "#7d3c98", "#17a589", "#a04000"};
  return colors[((i % 8) + 8) % 8];
}

inline Viewport auto_viewport(const std::vector<RenderItem>& items) {
  for (const auto& it : items)
    if (it.circle.is_circle() && it.circle.orientation() < 0) {
      double r = std::sqrt(to_double(it.circle.radius_sq()));
      return {to_double(it.circle.center().re), to_double(it.circle.center().im), r * 1.05};
    }
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  bool any = false;
  for (const auto& it : items) {
    if (!it.circle.is_circle()) continue;
    double r = std::sqrt(to_double(it.circle.radius_sq()));
    double x = to_double(it.circle.center().re), y = to_double(it.circle.center().im);
    x0 = std::min(x0, x - r), x1 = std::max(x1, x + r), y0 = std::min(y0, y - r), y1 = std::max(y1, y + r);
    any = true;
  }
  if (!any) return {};
  return {(x0 + x1) / 2, (y0 + y1) / 2, std::max(x1 - x0, y1 - y0) / 2 * 1.05};
}
}  // namespace detail

/// One <circle> or <line> per visible item, in input order.
inline std::string render_svg(const std::vector<RenderItem>& items, const RenderSpec& spec = {}) {
  Viewport vp = spec.viewport ? *spec.viewport : detail::auto_viewport(items);
  double aspect = static_cast<double>(spec.height) / spec.width;
  double hw = vp.half_width, hh = vp.half_width * aspect;
  double px = spec.width / (2 * hw);  // pixels per model unit
  using detail::fmt;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
         std::to_string(spec.height) + "\" viewBox=\"" + fmt(vp.cx - hw) + " " + fmt(-vp.cy - hh) + " " +
         fmt(2 * hw) + " " + fmt(2 * hh) + "\">\n";
  out += "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  for (const auto& it : items) {
    std::string color;
    switch (spec.color) {
      case ColorRule::ByLevel: color = detail::palette(it.level); break;
      case ColorRule::ByResidue: {
        int m = spec.residue_modulus > 0 ? spec.residue_modulus : 1;
        BigInt k = floor(it.curvature);
        color = detail::palette(static_cast<int>(((k % m) + m) % m));
        break;
      }
      case ColorRule::Monochrome: color = "#000000"; break;
    }
    if (it.circle.is_line()) {
      // a long segment through the viewport
      auto p0 = it.circle.p0(), p1 = it.circle.p1();
      double x0 = to_double(p0.re), y0 = to_double(p0.im);
      double dx = to_double(p1.re) - x0, dy = to_double(p1.im) - y0;
      double len = std::hypot(dx, dy);
      double reach = 4 * (std::hypot(vp.cx - x0, vp.cy - y0) + hw + hh);
      dx *= reach / len, dy *= reach / len;
      double w = std::max(spec.min_stroke, 1.0) / px;
      out += "<line x1=\"" + fmt(x0 - dx) + "\" y1=\"" + fmt(y0 - dy) + "\" x2=\"" + fmt(x0 + dx) + "\" y2=\"" +
             fmt(y0 + dy) + "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(w) + "\"/>\n";
      continue;
    }
    double r = std::sqrt(to_double(it.circle.radius_sq()));
    if (r < spec.min_radius) continue;
    double w = std::max(spec.min_stroke, spec.stroke_scale * r * px) / px;
    out += "<circle cx=\"" + fmt(to_double(it.circle.center().re)) + "\" cy=\"" + fmt(to_double(it.circle.center().im)) +
           "\" r=\"" + fmt(r) + "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(w) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace apollonian
