#pragma once

// Certification of torus diagrams: transverse monotonicity, bridge
// parameters, and the three pairwise links L1 = A u -B, L2 = B u -C,
// L3 = C u -A.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgetri/braid.hpp"
#include "bridgetri/diagram.hpp"
#include "bridgetri/garside.hpp"
#include "bridgetri/quasipositive.hpp"
#include "bridgetri/torus.hpp"

namespace bridgetri {

// --- transversality -------------------------------------------------------

struct TransverseViolation {
  int arc = 0;
  int segment = -1;  ///< -1 when the arc as a whole is at fault
  Color color = Color::kA;
  Vec2 displacement;
  std::string reason;
};

struct TransverseReport {
  std::vector<TransverseViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// With arcs oriented from - to +: red moves strictly up, blue strictly
/// left, green strictly down-right across the slope-1 lines (y - x
/// strictly decreasing).
inline TransverseReport check_transverse(const TorusDiagram& diag) {
  TransverseReport report;
  for (std::size_t a = 0; a < diag.arcs.size(); ++a) {
    const Arc& raw = diag.arcs[a];
    const int ia = static_cast<int>(a);
    if (diag.bridge_points.at(raw.start).sign == diag.bridge_points.at(raw.end).sign) {
      report.violations.push_back({ia, -1, raw.color, {}, "endpoints have the same sign"});
      continue;
    }
    const Arc arc = oriented(raw, diag);
    const auto pts = arc.path.lifted();
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const Vec2 v = pts[k + 1] - pts[k];
      // Report segments in stored order.
      const int stored = raw.start == arc.start ? static_cast<int>(k)
                                                : static_cast<int>(pts.size() - 2 - k);
      switch (arc.color) {
        case Color::kA:
          if (v.y <= 0) report.violations.push_back({ia, stored, arc.color, v, "red arc not moving up"});
          break;
        case Color::kB:
          if (v.x >= 0) report.violations.push_back({ia, stored, arc.color, v, "blue arc not moving left"});
          break;
        case Color::kC:
          if (v.y - v.x >= 0)
            report.violations.push_back({ia, stored, arc.color, v, "green arc not moving down-right"});
          break;
      }
    }
  }
  return report;
}

// --- link structure -------------------------------------------------------

/// A split closed component of L2: the torus link T(2, q); q = 1 is the unknot.
struct SplitComponent {
  int q = 1;
  std::string name() const { return q == 1 ? "unknot" : "T(2," + std::to_string(q) + ")"; }
  auto operator<=>(const SplitComponent&) const = default;
  bool operator==(const SplitComponent&) const = default;
};

/// Component data of one pairwise union of tangles.
struct CycleSummary {
  std::vector<std::vector<int>> cycles;  ///< bridge point ids
  std::vector<int> windings;             ///< vertical winding per cycle
};

struct DiagramStructure {
  int red_crossings = 0;
  CycleSummary l1, l2, l3;
  std::vector<std::vector<int>> l2_pieces;   ///< groups of l2 cycle indices
  std::vector<SplitComponent> l2_types;      ///< one per piece
  bool l2_split = true;
};

namespace detail {

inline CycleSummary trace_cycles(const TorusDiagram& diag, Color forward, Color backward) {
  const int npts = static_cast<int>(diag.bridge_points.size());
  std::vector<int> fwd(npts, -1), bwd(npts, -1);
  for (std::size_t a = 0; a < diag.arcs.size(); ++a) {
    const Arc& arc = diag.arcs[a];
    for (int id : {arc.start, arc.end}) {
      if (arc.color == forward) fwd[id] = static_cast<int>(a);
      if (arc.color == backward) bwd[id] = static_cast<int>(a);
    }
  }
  std::vector<Arc> oriented_arcs;
  for (const auto& arc : diag.arcs) oriented_arcs.push_back(oriented(arc, diag));

  CycleSummary out;
  std::vector<bool> seen(npts, false);
  for (int p0 = 0; p0 < npts; ++p0) {
    if (seen[p0] || diag.bridge_points[p0].sign > 0) continue;
    std::vector<int> cycle;
    std::int64_t rise = 0;
    int p = p0;
    do {
      if (fwd[p] < 0 || seen[p]) throw std::invalid_argument("diagram has broken incidence");
      seen[p] = true;
      cycle.push_back(p);
      const Arc& f = oriented_arcs[fwd[p]];
      const auto fp = f.path.lifted();
      rise += fp.back().y - fp.front().y;
      const int q = f.end;
      if (bwd[q] < 0 || seen[q]) throw std::invalid_argument("diagram has broken incidence");
      seen[q] = true;
      cycle.push_back(q);
      const Arc& b = oriented_arcs[bwd[q]];
      const auto bp = b.path.lifted();
      rise -= bp.back().y - bp.front().y;
      p = b.start;
    } while (p != p0);
    if (rise % kTorusScale != 0) throw std::invalid_argument("cycle does not close on the torus");
    out.cycles.push_back(std::move(cycle));
    out.windings.push_back(static_cast<int>(rise / kTorusScale));
  }
  return out;
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace detail

inline DiagramStructure analyze(const TorusDiagram& diag) {
  DiagramStructure st;
  st.l1 = detail::trace_cycles(diag, Color::kA, Color::kB);
  st.l2 = detail::trace_cycles(diag, Color::kB, Color::kC);
  st.l3 = detail::trace_cycles(diag, Color::kC, Color::kA);

  std::vector<int> cycle_of_point(diag.bridge_points.size(), -1);
  for (std::size_t c = 0; c < st.l2.cycles.size(); ++c)
    for (int id : st.l2.cycles[c]) cycle_of_point[id] = static_cast<int>(c);
  auto cycle_of_arc = [&](int arc) { return cycle_of_point[diag.arcs[arc].start]; };

  const auto segs = collect_segments(diag);
  const auto contacts = find_contacts(diag, segs);
  std::vector<int> parent(st.l2.cycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::pair<int, int>> cross_piece;  // blue/green contacts between cycles
  std::vector<std::pair<int, int>> green_green;
  for (const auto& c : contacts) {
    if (c.kind != Contact::kProper) continue;
    const int a1 = segs[c.first].arc;
    const int a2 = segs[c.second].arc;
    const Color c1 = diag.arcs[a1].color;
    const Color c2 = diag.arcs[a2].color;
    if (c1 == Color::kA && c2 == Color::kA) ++st.red_crossings;
    if (c1 == Color::kA || c2 == Color::kA) continue;
    const int k1 = cycle_of_arc(a1);
    const int k2 = cycle_of_arc(a2);
    if (c1 == Color::kC && c2 == Color::kC) {
      green_green.emplace_back(k1, k2);
      parent[detail::find_root(parent, k1)] = detail::find_root(parent, k2);
    } else if (k1 != k2) {
      cross_piece.emplace_back(k1, k2);
    }
  }

  std::vector<int> piece_of_root(st.l2.cycles.size(), -1);
  for (std::size_t c = 0; c < st.l2.cycles.size(); ++c) {
    const int r = detail::find_root(parent, static_cast<int>(c));
    if (piece_of_root[r] < 0) {
      piece_of_root[r] = static_cast<int>(st.l2_pieces.size());
      st.l2_pieces.emplace_back();
    }
    st.l2_pieces[piece_of_root[r]].push_back(static_cast<int>(c));
  }
  std::vector<int> twist_count(st.l2_pieces.size(), 0);
  for (auto [k1, k2] : green_green) ++twist_count[piece_of_root[detail::find_root(parent, k1)]];
  for (int t : twist_count) st.l2_types.push_back({t + 1});
  for (auto [k1, k2] : cross_piece)
    if (detail::find_root(parent, k1) != detail::find_root(parent, k2)) st.l2_split = false;
  return st;
}

// --- bridge parameters ----------------------------------------------------

struct BridgeParams {
  int b = 0;
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;
  int s = 0;
  bool operator==(const BridgeParams&) const = default;
};

/// Bridge parameters of a fully stabilized diagram.
inline BridgeParams bridge_params(const TorusDiagram& diag, const DiagramStructure& st) {
  if (st.red_crossings > 0)
    throw std::invalid_argument("bridge parameters need a diagram without A-crossings");
  return BridgeParams{diag.bridge_index(), static_cast<int>(st.l1.cycles.size()),
                      static_cast<int>(st.l2_pieces.size()), static_cast<int>(st.l3.cycles.size()),
                      diag.stabilization_count};
}

inline BridgeParams bridge_params(const TorusDiagram& diag) { return bridge_params(diag, analyze(diag)); }

/// (2d(d-1) + s; d, d(d-1) + s, d) for a smooth degree-d surface.
inline BridgeParams expected_smooth_params(int d, int s) {
  return BridgeParams{2 * d * (d - 1) + s, d, d * (d - 1) + s, d, s};
}

// --- pairwise links -------------------------------------------------------

enum class Handlebody { kAlpha, kBeta, kGamma };
enum class LinkOrientation { kInherited, kReversed };

inline const char* handlebody_name(Handlebody h) {
  switch (h) {
    case Handlebody::kAlpha: return "H_alpha";
    case Handlebody::kBeta: return "H_beta";
    case Handlebody::kGamma: return "H_gamma";
  }
  return "?";
}

/// A pairwise union of tangles, presented as a braid closure in a solid
/// torus and/or a list of split closed components.
struct TangleLink {
  Handlebody ambient = Handlebody::kAlpha;
  std::optional<BraidWord> braid;  ///< empty if it cannot be read off
  std::vector<SplitComponent> split_components;
  LinkOrientation orientation = LinkOrientation::kInherited;
  std::string framing;
  int components = 0;
  std::vector<int> windings;
  bool split = true;
};

struct PairwiseLinks {
  TangleLink l1, l2, l3;
  int stabilizations = 0;
  int red_crossings = 0;
};

/// L3 read from the top of the diagram down: g_n s1^-k_n g_n^-1 ... g_1 s1^-k_1 g_1^-1.
inline BraidWord l3_word(const Factorization& f) {
  BraidWord w(f.strands);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
    w = compose({w, it->conjugator, generator_power(f.strands, 1, -it->signed_exponent()),
                 invert(it->conjugator)});
  return w;
}

inline PairwiseLinks pairwise_links(const TorusDiagram& diag, const DiagramStructure& st,
                                    const Factorization& f) {
  PairwiseLinks links;
  links.stabilizations = diag.stabilization_count;
  links.red_crossings = st.red_crossings;

  TangleLink& l1 = links.l1;
  l1.ambient = Handlebody::kAlpha;
  l1.components = static_cast<int>(st.l1.cycles.size());
  l1.windings = st.l1.windings;
  if (st.red_crossings == 0) {
    int strands = 0;
    for (int w : st.l1.windings) strands += std::abs(w);
    l1.braid = identity_braid(std::max(1, strands));
  }

  TangleLink& l2 = links.l2;
  l2.ambient = Handlebody::kBeta;
  l2.components = static_cast<int>(st.l2.cycles.size());
  l2.windings = st.l2.windings;
  l2.split_components = st.l2_types;
  l2.split = st.l2_split;

  TangleLink& l3 = links.l3;
  l3.ambient = Handlebody::kAlpha;
  l3.orientation = LinkOrientation::kReversed;
  l3.framing = "(1,1)";
  l3.components = static_cast<int>(st.l3.cycles.size());
  l3.windings = st.l3.windings;
  l3.braid = l3_word(f);
  return links;
}

inline PairwiseLinks pairwise_links(const TorusDiagram& diag, const Factorization& f) {
  return pairwise_links(diag, analyze(diag), f);
}

struct TrivialityReport {
  bool l1_ok = false;
  bool l2_ok = false;
  bool l3_ok = false;
  std::vector<std::string> notes;
  bool ok() const { return l1_ok && l2_ok && l3_ok; }
};

/// Split components expected in L2: one per band, plus one unknot per
/// stabilization.
inline std::vector<SplitComponent> expected_l2(const Factorization& f, int stabilizations) {
  std::vector<SplitComponent> out;
  for (const auto& band : f.factors) out.push_back({band.exponent >= 2 ? band.exponent + 1 : 1});
  for (int k = 0; k < stabilizations; ++k) out.push_back({1});
  std::sort(out.begin(), out.end());
  return out;
}

inline TrivialityReport verify_trivial(const PairwiseLinks& links, const Factorization& f) {
  TrivialityReport r;
  const int d = f.strands;

  const auto& l1 = links.l1;
  const bool l1_windings = std::all_of(l1.windings.begin(), l1.windings.end(), [](int w) { return w == 1; });
  r.l1_ok = l1.braid.has_value() && l1.braid->strands() == d && is_identity(*l1.braid) &&
            l1.components == d && l1_windings;
  if (!l1.braid) r.notes.push_back("L1: unresolved A-crossings, braid not readable");
  else if (!r.l1_ok) r.notes.push_back("L1: not the closure of the trivial " + std::to_string(d) + "-braid");

  std::vector<SplitComponent> found = links.l2.split_components;
  std::sort(found.begin(), found.end());
  r.l2_ok = links.l2.split && found == expected_l2(f, links.stabilizations);
  if (!links.l2.split) r.notes.push_back("L2: components are not split");
  else if (!r.l2_ok) r.notes.push_back("L2: component types differ from the bands");

  const auto& l3 = links.l3;
  const bool l3_windings = std::all_of(l3.windings.begin(), l3.windings.end(), [](int w) { return w == -1; });
  r.l3_ok = l3.braid.has_value() && l3.braid->strands() == d && l3.components == d && l3_windings &&
            equal(*l3.braid, invert(full_twist(d)));
  if (!r.l3_ok) r.notes.push_back("L3: braid is not the negative full twist on d strands");
  return r;
}

}  // namespace bridgetri
