#pragma once

// Torus (shadow) diagrams: bridge points on the central torus joined by
// red (A), blue (B) and green (C) arcs, the projections of the three
// tangles.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgetri/torus.hpp"

namespace bridgetri {

enum class Color { kA, kB, kC };

inline constexpr Color kColors[] = {Color::kA, Color::kB, Color::kC};

inline char color_letter(Color c) {
  switch (c) {
    case Color::kA: return 'A';
    case Color::kB: return 'B';
    case Color::kC: return 'C';
  }
  return '?';
}

inline std::optional<Color> color_from_letter(char c) {
  switch (c) {
    case 'A': return Color::kA;
    case 'B': return Color::kB;
    case 'C': return Color::kC;
    default: return std::nullopt;
  }
}

inline int color_index(Color c) { return static_cast<int>(c); }

struct BridgePoint {
  Vec2 position;
  int sign = +1;
  bool operator==(const BridgePoint&) const = default;
};

/// An arc runs along `path` from bridge point `start` to bridge point `end`.
struct Arc {
  Color color = Color::kA;
  int start = 0;
  int end = 0;
  TorusPath path;
  bool operator==(const Arc&) const = default;
};

struct TorusDiagram {
  int strands = 1;
  std::vector<BridgePoint> bridge_points;
  std::vector<Arc> arcs;
  int stabilization_count = 0;

  /// Half the number of bridge points.
  int bridge_index() const { return static_cast<int>(bridge_points.size() / 2); }
  bool operator==(const TorusDiagram&) const = default;
};

/// The arc traversed from its negative to its positive bridge point.
inline Arc oriented(const Arc& arc, const TorusDiagram& diag) {
  if (diag.bridge_points.at(arc.start).sign < 0) return arc;
  return Arc{arc.color, arc.end, arc.start, arc.path.reversed()};
}

/// A lifted segment of one arc.
struct SegmentRef {
  int arc = 0;
  int index = 0;
  Segment segment;
};

inline std::vector<SegmentRef> collect_segments(const TorusDiagram& diag) {
  std::vector<SegmentRef> out;
  for (std::size_t a = 0; a < diag.arcs.size(); ++a) {
    const auto pts = diag.arcs[a].path.lifted();
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      Segment s{pts[k], pts[k + 1]};
      const Vec2 base{floor_div(s.a.x, kTorusScale) * kTorusScale,
                      floor_div(s.a.y, kTorusScale) * kTorusScale};
      out.push_back({static_cast<int>(a), static_cast<int>(k), s.shifted(Vec2{} - base)});
    }
  }
  return out;
}

struct ContactRecord {
  int first = 0;   ///< index into the segment list
  int second = 0;  ///< index into the segment list
  Contact kind = Contact::kNone;
  Vec2 shift;      ///< translation applied to the second segment
};

namespace detail {

/// Whether the touch between two segments happens only at a bridge point that
/// both arcs end at.
inline bool touch_at_shared_endpoint(const TorusDiagram& diag, const SegmentRef& s,
                                     const SegmentRef& t, Vec2 shift) {
  const Arc& arc_s = diag.arcs[s.arc];
  const Arc& arc_t = diag.arcs[t.arc];
  std::set<int> shared;
  for (int e : {arc_s.start, arc_s.end})
    if (e == arc_t.start || e == arc_t.end) shared.insert(e);
  if (shared.empty()) return false;
  const Segment ts = t.segment.shifted(shift);
  // Every touching point must be one of the shared bridge points, at an
  // endpoint of both segments.
  std::vector<Vec2> touching;
  for (Vec2 p : {s.segment.a, s.segment.b})
    if (orientation(ts.a, ts.b, p) == 0 && within_box(p, ts)) touching.push_back(p);
  for (Vec2 p : {ts.a, ts.b})
    if (orientation(s.segment.a, s.segment.b, p) == 0 && within_box(p, s.segment))
      touching.push_back(p);
  for (Vec2 p : touching) {
    const bool end_of_s = p == s.segment.a || p == s.segment.b;
    const bool end_of_t = p == ts.a || p == ts.b;
    if (!end_of_s || !end_of_t) return false;
    bool is_shared_point = false;
    for (int id : shared)
      if (reduce(p) == diag.bridge_points[id].position) is_shared_point = true;
    if (!is_shared_point) return false;
  }
  return true;
}

}  // namespace detail

/// Every contact between distinct segments (adjacent segments of one arc
/// excluded). Touches at a bridge point shared by both arcs are dropped.
inline std::vector<ContactRecord> find_contacts(const TorusDiagram& diag,
                                                const std::vector<SegmentRef>& segs) {
  std::vector<ContactRecord> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const SegmentRef& s = segs[i];
      const SegmentRef& t = segs[j];
      const bool same_arc = s.arc == t.arc;
      for (const auto& c : torus_contacts(s.segment, t.segment)) {
        if (same_arc && std::abs(s.index - t.index) == 1 && c.kind == Contact::kTouch) {
          // Consecutive segments share their joint; anything else is an overlap.
          const Segment ts = t.segment.shifted(c.shift);
          const bool joint = (s.segment.b == ts.a || s.segment.a == ts.b) &&
                             cross(s.segment.b - s.segment.a, ts.b - ts.a) != 0;
          if (joint) continue;
        }
        if (c.kind == Contact::kTouch && !same_arc &&
            detail::touch_at_shared_endpoint(diag, s, t, c.shift))
          continue;
        if (c.kind == Contact::kTouch && same_arc && diag.arcs[s.arc].start == diag.arcs[s.arc].end)
          continue;
        out.push_back({static_cast<int>(i), static_cast<int>(j), c.kind, c.shift});
      }
    }
  }
  return out;
}

/// Structural problems: bad references, wrong incidence, unbalanced signs,
/// coordinates off the torus, degenerate segments, non-transverse contacts.
/// Empty when the diagram is well formed.
inline std::vector<std::string> structural_problems(const TorusDiagram& diag) {
  std::vector<std::string> problems;
  const int npts = static_cast<int>(diag.bridge_points.size());
  if (diag.strands < 1) problems.push_back("strand count must be >= 1");
  if (diag.stabilization_count < 0) problems.push_back("negative stabilization count");
  int plus = 0;
  for (int id = 0; id < npts; ++id) {
    const auto& bp = diag.bridge_points[id];
    if (!on_torus(bp.position)) problems.push_back("bridge point " + std::to_string(id) + " off the torus");
    if (bp.sign != 1 && bp.sign != -1) problems.push_back("bridge point " + std::to_string(id) + " has bad sign");
    if (bp.sign > 0) ++plus;
  }
  if (2 * plus != npts) problems.push_back("unequal numbers of + and - bridge points");

  std::vector<std::array<int, 3>> incidence(npts, {0, 0, 0});
  bool references_ok = true;
  for (std::size_t a = 0; a < diag.arcs.size(); ++a) {
    const Arc& arc = diag.arcs[a];
    const std::string tag = "arc " + std::to_string(a);
    if (arc.start < 0 || arc.start >= npts || arc.end < 0 || arc.end >= npts) {
      problems.push_back(tag + " references a missing bridge point");
      references_ok = false;
      continue;
    }
    ++incidence[arc.start][color_index(arc.color)];
    ++incidence[arc.end][color_index(arc.color)];
    if (diag.bridge_points[arc.start].sign == diag.bridge_points[arc.end].sign)
      problems.push_back(tag + " joins two bridge points of the same sign");
    if (arc.path.vertices.size() < 2 || arc.path.wraps.size() + 1 != arc.path.vertices.size()) {
      problems.push_back(tag + " has a malformed path");
      references_ok = false;
      continue;
    }
    for (const Vec2& v : arc.path.vertices)
      if (!on_torus(v)) problems.push_back(tag + " has a vertex off the torus");
    if (arc.path.vertices.front() != diag.bridge_points[arc.start].position ||
        arc.path.vertices.back() != diag.bridge_points[arc.end].position)
      problems.push_back(tag + " does not end at its bridge points");
    const auto pts = arc.path.lifted();
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      if (pts[k] == pts[k + 1]) problems.push_back(tag + " has a degenerate segment");
  }
  for (int id = 0; id < npts; ++id)
    for (Color c : kColors)
      if (incidence[id][color_index(c)] != 1)
        problems.push_back("bridge point " + std::to_string(id) + " meets " +
                           std::to_string(incidence[id][color_index(c)]) + " arcs of color " +
                           color_letter(c));
  if (!references_ok || !problems.empty()) return problems;

  const auto segs = collect_segments(diag);
  for (const auto& c : find_contacts(diag, segs))
    if (c.kind == Contact::kTouch)
      problems.push_back("arcs " + std::to_string(segs[c.first].arc) + " and " +
                         std::to_string(segs[c.second].arc) + " meet non-transversely");
  return problems;
}

}  // namespace bridgetri
