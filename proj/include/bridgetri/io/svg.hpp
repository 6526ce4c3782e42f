#pragma once

// SVG 1.1 drawing of a torus diagram in the unit square with opposite sides
// identified. Arcs are cut where they leave the square so every polyline
// stays inside the frame.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bridgetri/diagram.hpp"

namespace bridgetri::io {

struct SvgStyle {
  double size = 600.0;
  double margin = 20.0;
  double stroke_width = 1.5;
  double dot_radius = 3.5;
};

namespace detail {

inline const char* svg_color(Color c) {
  switch (c) {
    case Color::kA: return "red";
    case Color::kB: return "blue";
    case Color::kC: return "green";
  }
  return "black";
}

struct PointD {
  double x = 0;
  double y = 0;
};

/// Pieces of one lifted segment, each tagged with its cell and translated
/// back into [0,G)^2.
inline void split_segment(Vec2 a, Vec2 b, std::vector<std::pair<Vec2, std::pair<PointD, PointD>>>& out) {
  const double G = static_cast<double>(kTorusScale);
  std::vector<double> ts{0.0, 1.0};
  auto add_crossings = [&](std::int64_t p, std::int64_t q) {
    if (p == q) return;
    const std::int64_t lo = std::min(p, q), hi = std::max(p, q);
    for (std::int64_t k = ceil_div(lo, kTorusScale); k * kTorusScale <= hi; ++k) {
      const double t = static_cast<double>(k * kTorusScale - p) / static_cast<double>(q - p);
      if (t > 0.0 && t < 1.0) ts.push_back(t);
    }
  };
  add_crossings(a.x, b.x);
  add_crossings(a.y, b.y);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  const double dx = static_cast<double>(b.x - a.x), dy = static_cast<double>(b.y - a.y);
  auto at = [&](double t) { return PointD{static_cast<double>(a.x) + t * dx, static_cast<double>(a.y) + t * dy}; };
  for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
    const PointD mid = at((ts[j] + ts[j + 1]) / 2);
    const Vec2 cell{static_cast<std::int64_t>(std::floor(mid.x / G)), static_cast<std::int64_t>(std::floor(mid.y / G))};
    PointD p = at(ts[j]), q = at(ts[j + 1]);
    p.x -= cell.x * G, p.y -= cell.y * G;
    q.x -= cell.x * G, q.y -= cell.y * G;
    out.push_back({cell, {p, q}});
  }
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// One polyline per maximal run of an arc inside a single copy of the square.
inline std::vector<std::pair<Color, std::vector<detail::PointD>>> svg_polylines(const TorusDiagram& diag) {
  std::vector<std::pair<Color, std::vector<detail::PointD>>> lines;
  for (const Arc& arc : diag.arcs) {
    const auto pts = arc.path.lifted();
    std::vector<std::pair<Vec2, std::pair<detail::PointD, detail::PointD>>> pieces;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) detail::split_segment(pts[k], pts[k + 1], pieces);
    bool open = false;
    Vec2 cell;
    for (const auto& [c, pq] : pieces) {
      if (!open || c != cell) {
        lines.push_back({arc.color, {pq.first}});
        cell = c;
        open = true;
      }
      lines.back().second.push_back(pq.second);
    }
  }
  return lines;
}

inline std::string export_svg(const TorusDiagram& diag, const SvgStyle& style = {}) {
  using detail::fmt;
  const double G = static_cast<double>(kTorusScale);
  const double side = style.size - 2 * style.margin;
  auto px = [&](double x) { return fmt(style.margin + x / G * side); };
  auto py = [&](double y) { return fmt(style.margin + (1.0 - y / G) * side); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(style.size) << "\" height=\""
     << fmt(style.size) << "\" viewBox=\"0 0 " << fmt(style.size) << ' ' << fmt(style.size) << "\">\n"
     << "  <rect x=\"" << fmt(style.margin) << "\" y=\"" << fmt(style.margin) << "\" width=\"" << fmt(side)
     << "\" height=\"" << fmt(side) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (const auto& [color, pts] : svg_polylines(diag)) {
    os << "  <polyline fill=\"none\" stroke=\"" << detail::svg_color(color) << "\" stroke-width=\""
       << fmt(style.stroke_width) << "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << px(pts[k].x) << ',' << py(pts[k].y);
    os << "\"/>\n";
  }
  for (const BridgePoint& bp : diag.bridge_points) {
    const double x = static_cast<double>(bp.position.x), y = static_cast<double>(bp.position.y);
    os << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << fmt(style.dot_radius)
       << "\" fill=\"black\"/>\n"
       << "  <text x=\"" << fmt(style.margin + x / G * side + style.dot_radius + 1) << "\" y=\""
       << fmt(style.margin + (1.0 - y / G) * side - style.dot_radius - 1)
       << "\" font-family=\"monospace\" font-size=\"10\">" << (bp.sign > 0 ? "+" : "-") << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bridgetri::io
