#pragma once

// Mini-stabilization: every crossing between red arcs is removed by cutting
// one of the two red strands just around the crossing. The cut leaves a new
// + point below and a new - point above; a short blue arc and a short green
// arc join the new pair into a small bigon, i.e. one more split unknot of the
// blue/green link.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "bridgetri/diagram.hpp"
#include "bridgetri/torus.hpp"

namespace bridgetri {

namespace detail {

inline bool goes_up_right(const Segment& s) {
  const Vec2 v = s.b - s.a;
  return v.x > 0 && v.y > 0;
}

inline Vec2 lerp_round(Vec2 a, Vec2 b, double t) {
  return {a.x + std::llround(t * static_cast<double>(b.x - a.x)),
          a.y + std::llround(t * static_cast<double>(b.y - a.y))};
}

}  // namespace detail

/// Removes every A-crossing. Each removal adds one bridge pair and bumps the
/// stabilization count. The cut strand is the one heading up and to the right
/// whenever the crossing has one.
inline TorusDiagram mini_stabilize(const TorusDiagram& input) {
  TorusDiagram diag = input;
  for (auto& arc : diag.arcs) arc = oriented(arc, diag);

  const auto segs = collect_segments(diag);
  // arc -> segment -> cut parameters
  std::map<int, std::map<int, std::vector<double>>> cuts;
  int removed = 0;
  for (const auto& c : find_contacts(diag, segs)) {
    if (c.kind != Contact::kProper) continue;
    const SegmentRef& s = segs[c.first];
    const SegmentRef& t = segs[c.second];
    if (diag.arcs[s.arc].color != Color::kA || diag.arcs[t.arc].color != Color::kA) continue;
    const Segment t_shifted = t.segment.shifted(c.shift);
    const bool cut_first = detail::goes_up_right(s.segment) || !detail::goes_up_right(t.segment);
    if (cut_first)
      cuts[s.arc][s.index].push_back(crossing_parameter(s.segment, t_shifted));
    else
      cuts[t.arc][t.index].push_back(crossing_parameter(t_shifted, s.segment));
    ++removed;
  }
  if (removed == 0) return diag;

  TorusDiagram out;
  out.strands = diag.strands;
  out.bridge_points = diag.bridge_points;
  out.stabilization_count = diag.stabilization_count + removed;
  std::vector<Arc> extra;

  for (std::size_t a = 0; a < diag.arcs.size(); ++a) {
    const Arc& arc = diag.arcs[a];
    auto found = cuts.find(static_cast<int>(a));
    if (found == cuts.end()) {
      out.arcs.push_back(arc);
      continue;
    }
    const auto pts = arc.path.lifted();
    std::vector<Vec2> piece{pts[0]};
    int piece_start = arc.start;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      auto seg_cuts = found->second.find(static_cast<int>(k));
      if (seg_cuts != found->second.end()) {
        std::vector<double> ts = seg_cuts->second;
        std::sort(ts.begin(), ts.end());
        for (std::size_t j = 0; j < ts.size(); ++j) {
          double room = std::min(ts[j], 1.0 - ts[j]);
          if (j > 0) room = std::min(room, ts[j] - ts[j - 1]);
          if (j + 1 < ts.size()) room = std::min(room, ts[j + 1] - ts[j]);
          const double w = room / 2;
          const Vec2 p = detail::lerp_round(pts[k], pts[k + 1], ts[j] - w);
          const Vec2 q = detail::lerp_round(pts[k], pts[k + 1], ts[j] + w);

          const int plus_id = static_cast<int>(out.bridge_points.size());
          const int minus_id = plus_id + 1;
          out.bridge_points.push_back({reduce(p), +1});
          out.bridge_points.push_back({reduce(q), -1});

          piece.push_back(p);
          out.arcs.push_back({Color::kA, piece_start, plus_id, path_from_lifted(simplify_lifted(piece))});
          piece = {q};
          piece_start = minus_id;

          // Bigon from the new - point down to the new + point: blue bends
          // up-left, green bends down-right.
          const Vec2 span = q - p;
          const std::int64_t bend = std::max<std::int64_t>(1, (span.y - span.x) / 4);
          const Vec2 blue_mid = p + Vec2{span.x / 2, span.y / 2 + bend};
          const Vec2 green_mid = p + Vec2{span.x / 2 + bend, span.y / 2};
          extra.push_back({Color::kB, minus_id, plus_id, path_from_lifted({q, blue_mid, p})});
          extra.push_back({Color::kC, minus_id, plus_id, path_from_lifted({q, green_mid, p})});
        }
      }
      piece.push_back(pts[k + 1]);
    }
    out.arcs.push_back({Color::kA, piece_start, arc.end, path_from_lifted(simplify_lifted(piece))});
  }
  for (auto& e : extra) out.arcs.push_back(std::move(e));
  return out;
}

}  // namespace bridgetri
