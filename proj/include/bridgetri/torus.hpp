#pragma once

// Exact piecewise-linear geometry on the flat torus R^2 / (G Z)^2.
//
// Coordinates are integers in units of 1/G of the torus side. A path is a
// vertex list reduced mod G plus, per segment, the number of periods the
// segment crosses, so the lifted displacement of segment k is
// v[k+1] - v[k] + G * wrap[k].

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bridgetri {

inline constexpr std::int64_t kTorusScale = 1'000'000;

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(std::int64_t k) const { return {x * k, y * k}; }
  auto operator<=>(const Vec2&) const = default;
  bool operator==(const Vec2&) const = default;
};

/// Integer wrap counts of one segment.
struct Wrap {
  int x = 0;
  int y = 0;
  auto operator<=>(const Wrap&) const = default;
  bool operator==(const Wrap&) const = default;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::int64_t mod_torus(std::int64_t v) { return v - floor_div(v, kTorusScale) * kTorusScale; }

inline Vec2 reduce(Vec2 p) { return {mod_torus(p.x), mod_torus(p.y)}; }

inline bool on_torus(Vec2 p) {
  return p.x >= 0 && p.x < kTorusScale && p.y >= 0 && p.y < kTorusScale;
}

inline std::int64_t cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const std::int64_t v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

/// A path stored mod G with per-segment wraps.
struct TorusPath {
  std::vector<Vec2> vertices;
  std::vector<Wrap> wraps;

  std::size_t segment_count() const { return wraps.size(); }

  /// Lifted vertices starting at vertices[0].
  std::vector<Vec2> lifted() const {
    std::vector<Vec2> out;
    out.reserve(vertices.size());
    if (vertices.empty()) return out;
    out.push_back(vertices[0]);
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
      const Vec2 step = vertices[k + 1] - vertices[k] +
                        Vec2{wraps[k].x * kTorusScale, wraps[k].y * kTorusScale};
      out.push_back(out.back() + step);
    }
    return out;
  }

  /// Same path traversed backwards.
  TorusPath reversed() const {
    TorusPath r;
    r.vertices.assign(vertices.rbegin(), vertices.rend());
    for (auto it = wraps.rbegin(); it != wraps.rend(); ++it) r.wraps.push_back({-it->x, -it->y});
    return r;
  }

  bool operator==(const TorusPath&) const = default;
};

/// Drops interior vertices that continue a segment in the same direction.
inline std::vector<Vec2> simplify_lifted(const std::vector<Vec2>& pts) {
  std::vector<Vec2> out;
  for (const Vec2& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2) {
      const Vec2 a = out[out.size() - 2];
      const Vec2 b = out.back();
      const Vec2 u = b - a;
      const Vec2 v = p - b;
      if (cross(u, v) == 0 && u.x * v.x + u.y * v.y > 0) {
        out.back() = p;
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

inline TorusPath path_from_lifted(const std::vector<Vec2>& lifted) {
  TorusPath path;
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    path.vertices.push_back(reduce(lifted[k]));
    if (k == 0) continue;
    const Vec2 delta = lifted[k] - lifted[k - 1];
    const Vec2 base = path.vertices[k] - path.vertices[k - 1];
    path.wraps.push_back({static_cast<int>((delta.x - base.x) / kTorusScale),
                          static_cast<int>((delta.y - base.y) / kTorusScale)});
  }
  return path;
}

struct Segment {
  Vec2 a;
  Vec2 b;
  std::int64_t min_x() const { return std::min(a.x, b.x); }
  std::int64_t max_x() const { return std::max(a.x, b.x); }
  std::int64_t min_y() const { return std::min(a.y, b.y); }
  std::int64_t max_y() const { return std::max(a.y, b.y); }
  Segment shifted(Vec2 by) const { return {a + by, b + by}; }
};

enum class Contact { kNone, kProper, kTouch };

inline bool within_box(Vec2 p, const Segment& s) {
  return p.x >= s.min_x() && p.x <= s.max_x() && p.y >= s.min_y() && p.y <= s.max_y();
}

/// Contact between two planar segments: proper (interiors cross at a single
/// point) or touching (shared point that is not a proper crossing).
inline Contact planar_contact(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::kProper;
  if ((o1 == 0 && within_box(t.a, s)) || (o2 == 0 && within_box(t.b, s)) ||
      (o3 == 0 && within_box(s.a, t)) || (o4 == 0 && within_box(s.b, t)))
    return Contact::kTouch;
  return Contact::kNone;
}

/// Fraction along s of its proper crossing with t.
inline double crossing_parameter(const Segment& s, const Segment& t) {
  const Vec2 r = s.b - s.a;
  const Vec2 q = t.b - t.a;
  const double denom = static_cast<double>(cross(r, q));
  return static_cast<double>(cross(t.a - s.a, q)) / denom;
}

/// One contact between lifted segments, with the translation of the second
/// segment that realizes it.
struct TorusContact {
  Contact kind = Contact::kNone;
  Vec2 shift;
};

/// All contacts between the torus images of two lifted segments.
inline std::vector<TorusContact> torus_contacts(const Segment& s, const Segment& t) {
  std::vector<TorusContact> out;
  const std::int64_t ax_lo = ceil_div(s.min_x() - t.max_x(), kTorusScale);
  const std::int64_t ax_hi = floor_div(s.max_x() - t.min_x(), kTorusScale);
  const std::int64_t ay_lo = ceil_div(s.min_y() - t.max_y(), kTorusScale);
  const std::int64_t ay_hi = floor_div(s.max_y() - t.min_y(), kTorusScale);
  for (std::int64_t ax = ax_lo; ax <= ax_hi; ++ax) {
    for (std::int64_t ay = ay_lo; ay <= ay_hi; ++ay) {
      const Vec2 shift{ax * kTorusScale, ay * kTorusScale};
      const Contact c = planar_contact(s, t.shifted(shift));
      if (c != Contact::kNone) out.push_back({c, shift});
    }
  }
  return out;
}

/// Whether p (a torus point) lies on the torus image of segment s.
inline bool torus_point_on_segment(Vec2 p, const Segment& s) {
  const std::int64_t ax_lo = ceil_div(s.min_x() - p.x, kTorusScale);
  const std::int64_t ax_hi = floor_div(s.max_x() - p.x, kTorusScale);
  const std::int64_t ay_lo = ceil_div(s.min_y() - p.y, kTorusScale);
  const std::int64_t ay_hi = floor_div(s.max_y() - p.y, kTorusScale);
  for (std::int64_t ax = ax_lo; ax <= ax_hi; ++ax)
    for (std::int64_t ay = ay_lo; ay <= ay_hi; ++ay) {
      const Vec2 q = p + Vec2{ax * kTorusScale, ay * kTorusScale};
      if (orientation(s.a, s.b, q) == 0 && within_box(q, s)) return true;
    }
  return false;
}

}  // namespace bridgetri
