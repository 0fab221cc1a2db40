#ifndef BARVIS_QUASI_PLANAR_HPP
#define BARVIS_QUASI_PLANAR_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barvis/bar_layout.hpp"
#include "barvis/errors.hpp"
#include "barvis/geometry.hpp"
#include "barvis/graph.hpp"
#include "barvis/rational.hpp"

namespace barvis {

enum class EdgeColor { blue, red };

inline std::string to_string(EdgeColor c) { return c == EdgeColor::blue ? "blue" : "red"; }

/// One edge of strong(L,1). `x_lo`, `x_hi` bound the rightmost elementary
/// interval where the edge is seen: directly for blue edges, through exactly
/// one bar (the bypass) for red ones.
struct ClassifiedEdge {
  Edge edge;
  EdgeColor color = EdgeColor::blue;
  Rational x_lo;
  Rational x_hi;
  std::optional<Vertex> bypass;
};

struct EdgeClassification {
  std::vector<ClassifiedEdge> edges;  // sorted by edge

  std::vector<Edge> of_color(EdgeColor c) const {
    std::vector<Edge> out;
    for (const auto& e : edges)
      if (e.color == c) out.push_back(e.edge);
    return out;
  }
};

inline EdgeClassification classify_visibility_edges(const BarLayout& layout) {
  struct Seen {
    Rational lo, hi;
    Vertex bypass = -1;
  };
  std::map<Edge, Seen> blue, red;
  sweep_windows(layout, [&](const VisibilityWindow& w) {
    for (std::size_t i = 0; i + 1 < w.stack.size(); ++i) {
      blue[Edge(w.stack[i], w.stack[i + 1])] = {w.x_lo, w.x_hi, -1};
      if (i + 2 < w.stack.size()) red[Edge(w.stack[i], w.stack[i + 2])] = {w.x_lo, w.x_hi, w.stack[i + 1]};
    }
  });
  EdgeClassification out;
  for (const auto& [e, s] : blue) out.edges.push_back({e, EdgeColor::blue, s.lo, s.hi, std::nullopt});
  for (const auto& [e, s] : red)
    if (!blue.count(e)) out.edges.push_back({e, EdgeColor::red, s.lo, s.hi, s.bypass});
  std::sort(out.edges.begin(), out.edges.end(),
            [](const ClassifiedEdge& a, const ClassifiedEdge& b) { return a.edge < b.edge; });
  return out;
}

/// gamma: a quarter of the smallest positive gap among bar x-coordinates and
/// among bar y-coordinates. delta = gamma / (|E'|^2 + 1). epsilon separates
/// red edges whose shift counts coincide.
struct DrawingParams {
  Rational gamma;
  Rational delta;
  Rational epsilon;
  std::map<Edge, int> shift_count;  // red edges only
  friend bool operator==(const DrawingParams&, const DrawingParams&) = default;
};

struct DrawnEdge {
  Edge edge;
  EdgeColor color = EdgeColor::blue;
  Vertex lower = 0;  // polyline starts at this vertex's point
  Vertex upper = 0;
  std::optional<Vertex> bypass;
  std::vector<Point> polyline;
  friend bool operator==(const DrawnEdge&, const DrawnEdge&) = default;
};

struct PolylineDrawing {
  std::vector<Point> vertex_points;
  std::vector<DrawnEdge> edges;
  DrawingParams params;
  friend bool operator==(const PolylineDrawing&, const PolylineDrawing&) = default;
};

namespace detail {

inline Rational min_positive_gap(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::optional<Rational> best;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!best || v[i] - v[i - 1] < *best) best = v[i] - v[i - 1];
  return best.value_or(Rational(0));
}

}  // namespace detail

/// Polyline drawing of strong(L,1) with vertex v at the left end of its bar.
/// Blue edges bend twice next to their rightmost direct visibility; red ones
/// additionally detour around the left end of their bypass bar.
inline PolylineDrawing layout_to_quasiplanar(const BarLayout& layout) {
  PolylineDrawing d;
  for (const Bar& b : layout.bars()) d.vertex_points.push_back({b.x_left, b.y});
  const EdgeClassification cls = classify_visibility_edges(layout);
  if (cls.edges.empty()) return d;

  std::vector<Rational> xs, ys;
  for (const Bar& b : layout.bars()) {
    xs.push_back(b.x_left);
    xs.push_back(b.x_right);
    ys.push_back(b.y);
  }
  Rational gap = detail::min_positive_gap(xs);
  const Rational ygap = detail::min_positive_gap(ys);
  if (ygap > Rational(0) && ygap < gap) gap = ygap;
  const long m = static_cast<long>(cls.edges.size());
  DrawingParams& p = d.params;
  p.gamma = gap / Rational(4);
  p.delta = p.gamma / Rational(m * m + 1);
  p.epsilon = p.delta / Rational(m + 1);

  // Shift count: red edges with the same bypass seen further right.
  for (const auto& e : cls.edges) {
    if (e.color != EdgeColor::red) continue;
    int k = 0;
    for (const auto& f : cls.edges)
      if (f.color == EdgeColor::red && f.bypass == e.bypass && f.x_hi > e.x_hi) ++k;
    p.shift_count[e.edge] = k;
  }

  long index = 0;
  for (const auto& e : cls.edges) {
    DrawnEdge de;
    de.edge = e.edge;
    de.color = e.color;
    de.bypass = e.bypass;
    const Bar& a = layout.bar(e.edge.u);
    const Bar& b = layout.bar(e.edge.v);
    const Bar& lo = a.y < b.y ? a : b;
    const Bar& hi = a.y < b.y ? b : a;
    de.lower = lo.id;
    de.upper = hi.id;
    const Point start{lo.x_left, lo.y}, end{hi.x_left, hi.y};
    if (e.color == EdgeColor::blue) {
      const Rational x = e.x_hi - p.gamma;
      de.polyline = {start, {x, lo.y + p.gamma}, {x, hi.y - p.gamma}, end};
    } else {
      const Rational shift = Rational(p.shift_count.at(e.edge) + 1) * p.delta + Rational(index) * p.epsilon;
      const Rational x = e.x_hi - p.gamma - shift;
      const Bar& w = layout.bar(*e.bypass);
      de.polyline = {start,
                     {x, lo.y + p.gamma},
                     {x, w.y - p.gamma},
                     {w.x_left - shift, w.y},
                     {x, w.y + p.gamma},
                     {x, hi.y - p.gamma},
                     end};
    }
    ++index;
    d.edges.push_back(std::move(de));
  }
  return d;
}

namespace detail {

using i128 = __int128;

struct IPoint {
  i128 x, y;
  friend bool operator==(const IPoint&, const IPoint&) = default;
};

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Scales every coordinate by the lcm of all denominators.
inline std::vector<std::vector<IPoint>> to_lattice(const PolylineDrawing& d) {
  i128 scale = 1;
  auto absorb = [&](const Rational& r) {
    const i128 den = r.den();
    scale = scale / gcd128(scale, den) * den;
    if (scale > (static_cast<i128>(1) << 60)) throw std::overflow_error("drawing coordinates too fine to scale");
  };
  for (const auto& e : d.edges)
    for (const Point& pt : e.polyline) {
      absorb(pt.x);
      absorb(pt.y);
    }
  auto conv = [&](const Rational& r) { return static_cast<i128>(r.num()) * (scale / r.den()); };
  std::vector<std::vector<IPoint>> out;
  for (const auto& e : d.edges) {
    std::vector<IPoint> pl;
    for (const Point& pt : e.polyline) pl.push_back({conv(pt.x), conv(pt.y)});
    out.push_back(std::move(pl));
  }
  return out;
}

inline int orient(const IPoint& a, const IPoint& b, const IPoint& c) {
  const i128 dx1 = b.x - a.x, dy1 = b.y - a.y, dx2 = c.x - a.x, dy2 = c.y - a.y;
  const i128 limit = static_cast<i128>(1) << 62;
  auto small = [&](i128 v) { return v < limit && v > -limit; };
  if (small(dx1) && small(dy1) && small(dx2) && small(dy2)) {
    const i128 v = dx1 * dy2 - dy1 * dx2;
    return (v > 0) - (v < 0);
  }
  throw std::overflow_error("lattice coordinates too large for exact orientation");
}

inline bool on_segment(const IPoint& a, const IPoint& b, const IPoint& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

enum class Contact { none, point, overlap };

inline Contact segment_contact(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& e) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, e), o3 = orient(c, e, a), o4 = orient(c, e, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: overlap of positive length or a single shared point.
    auto key = [&](const IPoint& p) { return a.x != b.x ? p.x : p.y; };
    i128 lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    i128 lo2 = std::min(key(c), key(e)), hi2 = std::max(key(c), key(e));
    const i128 lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo < hi) return Contact::overlap;
    return lo == hi ? Contact::point : Contact::none;
  }
  if (o1 != o2 && o3 != o4) return Contact::point;
  if (o1 == 0 && on_segment(a, b, c)) return Contact::point;
  if (o2 == 0 && on_segment(a, b, e)) return Contact::point;
  if (o3 == 0 && on_segment(c, e, a)) return Contact::point;
  if (o4 == 0 && on_segment(c, e, b)) return Contact::point;
  return Contact::none;
}

inline void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x, std::vector<int>& best) {
  if (p.empty() && x.empty()) {
    if (r.size() > best.size()) best = r;
    return;
  }
  if (r.size() + p.size() <= best.size()) return;
  int pivot = !p.empty() ? p.front() : x.front();
  std::size_t most = 0;
  for (int u : p) {
    std::size_t c = 0;
    for (int v : p) c += adj[u][v];
    if (c >= most) most = c, pivot = u;
  }
  std::vector<int> candidates;
  for (int v : p)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> np, nx;
    for (int w : p)
      if (adj[v][w]) np.push_back(w);
    for (int w : x)
      if (adj[v][w]) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, best);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace detail

/// Pairs of edge indices (into d.edges) whose curves cross. Curves sharing
/// an endpoint never count as crossing, but their polylines must not
/// overlap along a segment. Throws DegenerateGeometryError on any
/// collinear overlap.
inline std::vector<std::pair<int, int>> crossing_pairs(const PolylineDrawing& d) {
  const auto pts = detail::to_lattice(d);
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(d.edges.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = d.edges[i].edge;
      const Edge& b = d.edges[j].edge;
      const bool adjacent = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      bool cross = false;
      for (std::size_t s = 0; s + 1 < pts[i].size(); ++s)
        for (std::size_t t = 0; t + 1 < pts[j].size(); ++t) {
          const auto c = detail::segment_contact(pts[i][s], pts[i][s + 1], pts[j][t], pts[j][t + 1]);
          if (c == detail::Contact::overlap)
            throw DegenerateGeometryError("edges " + std::to_string(a.u) + "-" + std::to_string(a.v) + " and " +
                                          std::to_string(b.u) + "-" + std::to_string(b.v) +
                                          " overlap along a segment; re-perturb the drawing parameters");
          if (c == detail::Contact::point) cross = true;
        }
      if (cross && !adjacent) out.emplace_back(i, j);
    }
  return out;
}

/// Largest set of pairwise crossing edges (indices into d.edges).
inline std::vector<int> max_crossing_clique(const PolylineDrawing& d) {
  const int m = static_cast<int>(d.edges.size());
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  for (auto [i, j] : crossing_pairs(d)) adj[i][j] = adj[j][i] = true;
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> r, best;
  if (m > 0) detail::bron_kerbosch(adj, r, p, {}, best);
  std::sort(best.begin(), best.end());
  return best;
}

inline int max_mutual_crossing(const PolylineDrawing& d) { return static_cast<int>(max_crossing_clique(d).size()); }

}  // namespace barvis

#endif  // BARVIS_QUASI_PLANAR_HPP
