#ifndef BARVIS_GEOMETRY_HPP
#define BARVIS_GEOMETRY_HPP

#include <algorithm>
#include <vector>

#include "barvis/rational.hpp"

namespace barvis {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

namespace geom {

inline Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int sign(const Rational& r) { return r > Rational(0) ? 1 : (r < Rational(0) ? -1 : 0); }

inline int orient(const Point& o, const Point& a, const Point& b) { return sign(cross(o, a, b)); }

/// 0 for directions in [0, pi), 1 for [pi, 2 pi), measured counterclockwise
/// from the positive x-axis.
inline int half(const Rational& dx, const Rational& dy) {
  return (dy > Rational(0) || (dy == Rational(0) && dx > Rational(0))) ? 0 : 1;
}

/// Strict counterclockwise polar order of direction vectors.
inline bool ccw_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  const int ha = half(ax, ay), hb = half(bx, by);
  if (ha != hb) return ha < hb;
  return ax * by - ay * bx > Rational(0);
}

/// Counterclockwise angle from `from` to `d`, compared as a key: true when
/// d1 is reached before d2 turning counterclockwise from `from`.
inline bool ccw_before(const Point& from, const Point& d1, const Point& d2) {
  auto key = [&](const Point& d) {
    // Rotate so that `from` points along +x: (x,y) -> (x*fx + y*fy, y*fx - x*fy).
    return Point{d.x * from.x + d.y * from.y, d.y * from.x - d.x * from.y};
  };
  const Point k1 = key(d1), k2 = key(d2);
  const bool z1 = k1.y == Rational(0) && k1.x > Rational(0);
  const bool z2 = k2.y == Rational(0) && k2.x > Rational(0);
  if (z1 || z2) return z1 && !z2;
  return ccw_less(k1.x, k1.y, k2.x, k2.y);
}

inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Whether closed segments ab and cd share at least one point.
inline bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

/// Twice the signed area of a closed polygon; positive when counterclockwise.
inline Rational signed_area2(const std::vector<Point>& poly) {
  Rational s(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    s = s + (a.x * b.y - b.x * a.y);
  }
  return s;
}

/// Even-odd test for a point not on the polygon boundary.
inline bool strictly_inside(const std::vector<Point>& poly, const Point& p) {
  bool in = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    if ((a.y > p.y) != (b.y > p.y)) {
      // x-coordinate of the edge at height p.y compared with p.x.
      const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) in = !in;
    }
  }
  return in;
}

}  // namespace geom
}  // namespace barvis

#endif  // BARVIS_GEOMETRY_HPP
