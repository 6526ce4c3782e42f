#pragma once

// Tile construction and assembly of the torus diagram of a factorization.
//
// Each band g sigma_1^k g^-1 becomes one horizontal band of the torus. The
// d red strands run upward; reading the tile from the top, the strands are
// braided by g, then strands 1 and 2 are cut by the four bridge points, then
// braided by g^-1. Tiles are stacked with the last band on top and the first
// at the bottom. Blue arcs cross between the two cut columns (one of them
// wrapping around the torus horizontally) and green arcs descend the cut
// columns; for k >= 2 the green arcs twist k times so that the blue/green
// component becomes T(2, k+1).
//
// With four bridge points a one-component L2 needs the blue and green
// matchings to differ, so the blue arcs always swap the cut columns. For
// even k the band itself does not permute strands, and L1 then fails to
// be a trivial braid closure; verify_trivial reports that.
//
// Orientation: arcs run from - to + bridge points. Within a tile the two -
// points sit above the two + points.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "bridgetri/braid.hpp"
#include "bridgetri/diagram.hpp"
#include "bridgetri/quasipositive.hpp"
#include "bridgetri/torus.hpp"

namespace bridgetri {

/// Placement of one tile: a horizontal band and the strand columns.
struct TileLayout {
  std::int64_t y0 = 0;
  std::int64_t height = kTorusScale;
  std::int64_t column0 = 0;
  std::int64_t column_spacing = 0;

  std::int64_t column(int position) const { return column0 + (position - 1) * column_spacing; }
};

/// A red strand piece inside one tile, in lifted coordinates. It enters at
/// the bottom edge (bottom_position > 0) or at a - bridge point, and leaves
/// at the top edge (top_position > 0) or at a + bridge point.
struct RedPiece {
  std::vector<Vec2> points;
  int bottom_position = 0;
  int start_point = -1;
  int top_position = 0;
  int end_point = -1;
};

struct FragmentArc {
  Color color = Color::kB;
  int start = 0;
  int end = 0;
  std::vector<Vec2> points;  ///< lifted
};

/// One tile before assembly. Bridge points are numbered locally:
/// 0, 1 are the - points on columns 1, 2; 2, 3 the + points on columns 1, 2.
struct TileFragment {
  int strands = 2;
  int exponent = 1;
  std::vector<BridgePoint> bridge_points;
  std::vector<FragmentArc> arcs;  ///< blue and green
  std::vector<RedPiece> red;

  /// Crossings among the red strands.
  int a_crossings() const {
    std::vector<Segment> segs;
    std::vector<std::pair<int, int>> owner;
    for (std::size_t p = 0; p < red.size(); ++p)
      for (std::size_t k = 0; k + 1 < red[p].points.size(); ++k) {
        segs.push_back({red[p].points[k], red[p].points[k + 1]});
        owner.emplace_back(static_cast<int>(p), static_cast<int>(k));
      }
    return count_proper(segs, owner);
  }

  /// Crossings between the green arcs; the blue/green component is
  /// T(2, green_crossings + 1).
  int green_crossings() const {
    std::vector<Segment> segs;
    std::vector<std::pair<int, int>> owner;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (arcs[a].color != Color::kC) continue;
      for (std::size_t k = 0; k + 1 < arcs[a].points.size(); ++k) {
        segs.push_back({arcs[a].points[k], arcs[a].points[k + 1]});
        owner.emplace_back(static_cast<int>(a), static_cast<int>(k));
      }
    }
    return count_proper(segs, owner);
  }

 private:
  static int count_proper(const std::vector<Segment>& segs,
                          const std::vector<std::pair<int, int>>& owner) {
    int count = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (owner[i].first == owner[j].first) continue;
        if (planar_contact(segs[i], segs[j]) == Contact::kProper) ++count;
      }
    return count;
  }
};

namespace detail {

/// Number of green twists drawn for a band of exponent k.
inline int green_twists(int exponent) { return exponent >= 2 ? exponent : 0; }

inline int tile_slots(const BandFactor& band) { return 2 * static_cast<int>(band.conjugator.length()) + 4; }

inline std::int64_t band_y0(std::size_t i, std::size_t n) {
  return static_cast<std::int64_t>(i) * kTorusScale / static_cast<std::int64_t>(n);
}

}  // namespace detail

/// Column layout shared by every tile of a factorization.
inline std::vector<TileLayout> plan_layout(const Factorization& f) {
  const std::size_t n = f.size();
  const int d = f.strands;
  if (n == 0) return {};
  std::int64_t min_slot = kTorusScale;
  int max_exponent = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t height = detail::band_y0(i + 1, n) - detail::band_y0(i, n);
    min_slot = std::min(min_slot, height / detail::tile_slots(f.factors[i]));
    max_exponent = std::max(max_exponent, f.factors[i].exponent);
  }
  const std::int64_t spacing =
      std::min<std::int64_t>(kTorusScale / (4 * d), min_slot / (4 * (max_exponent + 1)));
  if (spacing < 16)
    throw std::length_error("factorization too large for the coordinate grid");
  std::vector<TileLayout> out;
  for (std::size_t i = 0; i < n; ++i) {
    TileLayout t;
    t.y0 = detail::band_y0(i, n);
    t.height = detail::band_y0(i + 1, n) - t.y0;
    t.column_spacing = spacing;
    t.column0 = kTorusScale / 2 - (d - 1) * spacing / 2;
    out.push_back(t);
  }
  return out;
}

/// Draws the tile of one positive band at the given placement.
inline TileFragment build_tile(const BandFactor& band, int strands, const TileLayout& layout) {
  if (band.sign < 0)
    throw std::invalid_argument("negative band cannot be drawn in transverse position");
  if (band.exponent < 1) throw std::invalid_argument("band exponent must be >= 1");
  if (strands < 2 || band.strands() != strands)
    throw std::invalid_argument("tile needs a band in B_d with d >= 2");

  const std::vector<int>& g = band.conjugator.letters();
  const int len = static_cast<int>(g.size());
  const int slots = 2 * len + 4;
  auto y_at = [&](int s) { return layout.y0 + s * layout.height / slots; };
  auto x_at = [&](int p) { return layout.column(p); };
  // Red crossing letter in slot s, or 0. The top region spells g from the
  // top down, the bottom region spells g^-1 from the top down.
  auto letter_at = [&](int s) -> int {
    if (s < len) return -g[static_cast<std::size_t>(s)];
    if (s >= len + 4) return g[static_cast<std::size_t>(2 * len + 3 - s)];
    return 0;
  };
  const std::int64_t y_plus = y_at(len + 1);
  const std::int64_t y_minus = y_at(len + 3);

  TileFragment tile;
  tile.strands = strands;
  tile.exponent = band.exponent;
  tile.bridge_points = {{{x_at(1), y_minus}, -1},
                        {{x_at(2), y_minus}, -1},
                        {{x_at(1), y_plus}, +1},
                        {{x_at(2), y_plus}, +1}};

  auto step = [&](int s, int p) {
    const int l = std::abs(letter_at(s));
    if (l == 0) return p;
    if (p == l) return p + 1;
    if (p == l + 1) return p - 1;
    return p;
  };
  auto climb = [&](RedPiece& piece, int s, int p) {
    for (; s < slots; ++s) {
      p = step(s, p);
      piece.points.push_back({x_at(p), y_at(s + 1)});
    }
    piece.top_position = p;
  };

  for (int p0 = 1; p0 <= strands; ++p0) {
    RedPiece piece;
    piece.bottom_position = p0;
    piece.points.push_back({x_at(p0), y_at(0)});
    int p = p0;
    for (int s = 0; s < len; ++s) {
      p = step(s, p);
      piece.points.push_back({x_at(p), y_at(s + 1)});
    }
    if (p == 1 || p == 2) {
      piece.points.push_back({x_at(p), y_plus});
      piece.end_point = p == 1 ? 2 : 3;
    } else {
      piece.points.push_back({x_at(p), y_at(len + 4)});
      climb(piece, len + 4, p);
    }
    piece.points = simplify_lifted(piece.points);
    tile.red.push_back(std::move(piece));
  }
  for (int p = 1; p <= 2; ++p) {
    RedPiece piece;
    piece.start_point = p - 1;
    piece.points = {{x_at(p), y_minus}, {x_at(p), y_at(len + 4)}};
    climb(piece, len + 4, p);
    piece.points = simplify_lifted(piece.points);
    tile.red.push_back(std::move(piece));
  }

  // Blue: - on column 2 to + on column 1 directly; - on column 1 to + on
  // column 2 the long way round.
  tile.arcs.push_back({Color::kB, 1, 2, {{x_at(2), y_minus}, {x_at(1), y_plus}}});
  tile.arcs.push_back({Color::kB, 0, 3, {{x_at(1), y_minus}, {x_at(2) - kTorusScale, y_plus}}});

  // Green: straight down the cut columns, twisting in the lower part of the
  // bridge region for singular bands.
  const int twists = detail::green_twists(band.exponent);
  const std::int64_t twist_height = twists ? (45 * (y_minus - y_plus) / 100) / twists : 0;
  for (int p = 1; p <= 2; ++p) {
    FragmentArc arc{Color::kC, p - 1, -1, {{x_at(p), y_minus}}};
    int col = p;
    if (twists) {
      const std::int64_t top = y_plus + twists * twist_height;
      arc.points.push_back({x_at(col), top});
      for (int j = 1; j <= twists; ++j) {
        col = 3 - col;
        arc.points.push_back({x_at(col), top - j * twist_height});
      }
    } else {
      arc.points.push_back({x_at(col), y_plus});
    }
    arc.end = col == 1 ? 2 : 3;
    tile.arcs.push_back(std::move(arc));
  }
  return tile;
}

/// A tile drawn alone on the whole torus.
inline TileFragment build_tile(const BandFactor& band, int strands) {
  Factorization single{strands, {band}};
  return build_tile(band, strands, plan_layout(single).front());
}

/// Stacks the tiles of f (no validity check beyond drawability).
inline TorusDiagram assemble_tiles(const Factorization& f) {
  check_strands(f);
  if (f.strands < 2) throw std::invalid_argument("assemble needs d >= 2");
  if (f.factors.empty()) throw std::invalid_argument("assemble needs at least one band");
  const int d = f.strands;
  const std::size_t n = f.size();
  const auto layout = plan_layout(f);

  std::vector<TileFragment> tiles;
  for (std::size_t i = 0; i < n; ++i) {
    // The last band sits at the top of the torus.
    tiles.push_back(build_tile(f.factors[i], d, layout[i]));
  }

  TorusDiagram diag;
  diag.strands = d;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& bp : tiles[i].bridge_points) diag.bridge_points.push_back(bp);
  auto global_id = [](std::size_t tile, int local) { return static_cast<int>(4 * tile) + local; };

  // Red arcs: start at every - point and climb through the tiles above.
  std::vector<std::vector<bool>> used(n);
  for (std::size_t i = 0; i < n; ++i) used[i].assign(tiles[i].red.size(), false);
  auto bottom_piece = [&](std::size_t tile, int position) -> std::size_t {
    for (std::size_t k = 0; k < tiles[tile].red.size(); ++k)
      if (tiles[tile].red[k].bottom_position == position) return k;
    throw std::logic_error("missing red strand");
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < tiles[i].red.size(); ++k) {
      const RedPiece& first = tiles[i].red[k];
      if (first.start_point < 0) continue;
      used[i][k] = true;
      std::vector<Vec2> pts = first.points;
      std::size_t tile = i;
      const RedPiece* piece = &first;
      std::int64_t lift = 0;
      std::size_t guard = 0;
      while (piece->end_point < 0) {
        if (++guard > n * static_cast<std::size_t>(d) + 1)
          throw std::invalid_argument("a red strand never reaches a band");
        const int pos = piece->top_position;
        if (++tile == n) {
          tile = 0;
          lift += kTorusScale;
        }
        const std::size_t next = bottom_piece(tile, pos);
        used[tile][next] = true;
        piece = &tiles[tile].red[next];
        for (std::size_t q = 1; q < piece->points.size(); ++q)
          pts.push_back(piece->points[q] + Vec2{0, lift});
      }
      diag.arcs.push_back({Color::kA, global_id(i, first.start_point), global_id(tile, piece->end_point),
                           path_from_lifted(simplify_lifted(pts))});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (bool u : used[i])
      if (!u) throw std::invalid_argument("a red strand closes up without meeting a band");

  for (Color c : {Color::kB, Color::kC})
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& arc : tiles[i].arcs)
        if (arc.color == c)
          diag.arcs.push_back({c, global_id(i, arc.start), global_id(i, arc.end),
                               path_from_lifted(simplify_lifted(arc.points))});
  return diag;
}

/// Torus diagram of a valid factorization with positive bands.
inline TorusDiagram assemble(const Factorization& f) {
  const ValidationReport report = validate(f);
  if (!report.valid()) throw std::invalid_argument("assemble needs a valid factorization of the full twist");
  if (report.negative_factors > 0)
    throw std::invalid_argument("negative band cannot be drawn in transverse position");
  return assemble_tiles(f);
}

}  // namespace bridgetri
