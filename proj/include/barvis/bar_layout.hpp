#ifndef BARVIS_BAR_LAYOUT_HPP
#define BARVIS_BAR_LAYOUT_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "barvis/errors.hpp"
#include "barvis/graph.hpp"
#include "barvis/rational.hpp"

namespace barvis {

/// Horizontal segment [x_left, x_right] at height y standing for vertex `id`.
struct Bar {
  Vertex id = 0;
  Rational y;
  Rational x_left;
  Rational x_right;

  bool covers_open(const Rational& x) const { return x_left < x && x < x_right; }
  friend bool operator==(const Bar&, const Bar&) = default;
};

/// One bar per vertex 0..n-1, pairwise disjoint as closed segments.
class BarLayout {
 public:
  BarLayout() = default;
  explicit BarLayout(std::vector<Bar> bars) : bars_(std::move(bars)) {
    std::sort(bars_.begin(), bars_.end(), [](const Bar& a, const Bar& b) { return a.id < b.id; });
    validate();
  }

  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }
  const Bar& bar(Vertex v) const { return bars_.at(static_cast<std::size_t>(v)); }
  std::span<const Bar> bars() const { return bars_; }

  /// Throws InvariantError on the first violated invariant.
  void validate() const {
    for (std::size_t i = 0; i < bars_.size(); ++i) {
      if (bars_[i].id != static_cast<Vertex>(i))
        throw InvariantError("bar ids must be exactly 0..n-1 (missing or duplicate id near " + std::to_string(i) + ")");
      if (!(bars_[i].x_left < bars_[i].x_right))
        throw InvariantError("bar " + std::to_string(i) + " has non-positive length");
    }
    std::vector<const Bar*> order;
    order.reserve(bars_.size());
    for (const Bar& b : bars_) order.push_back(&b);
    std::sort(order.begin(), order.end(), [](const Bar* a, const Bar* b) {
      if (a->y != b->y) return a->y < b->y;
      return a->x_left < b->x_left;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Bar* a = order[i - 1];
      const Bar* b = order[i];
      if (a->y == b->y && !(a->x_right < b->x_left))
        throw InvariantError("bars " + std::to_string(a->id) + " and " + std::to_string(b->id) + " intersect");
    }
  }

  /// Keeps bars with id < n; used after deleting trailing dummy vertices.
  BarLayout prefix(int n) const {
    std::vector<Bar> kept(bars_.begin(), bars_.begin() + n);
    return BarLayout(std::move(kept));
  }

  friend bool operator==(const BarLayout&, const BarLayout&) = default;

 private:
  std::vector<Bar> bars_;
};

/// Open elementary x-interval between consecutive distinct endpoint
/// coordinates, with the bars spanning it ordered bottom to top.
struct VisibilityWindow {
  Rational x_lo;
  Rational x_hi;
  std::vector<Vertex> stack;
};

/// Left-to-right sweep over the elementary intervals that at least one bar
/// spans. `fn` receives each VisibilityWindow in increasing x order.
template <typename Fn>
void sweep_windows(const BarLayout& layout, Fn&& fn) {
  std::vector<Rational> xs;
  xs.reserve(2 * layout.size());
  for (const Bar& b : layout.bars()) {
    xs.push_back(b.x_left);
    xs.push_back(b.x_right);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Vertex> by_left(layout.size()), by_right(layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) by_left[i] = by_right[i] = static_cast<Vertex>(i);
  std::sort(by_left.begin(), by_left.end(),
            [&](Vertex a, Vertex b) { return layout.bar(a).x_left < layout.bar(b).x_left; });
  std::sort(by_right.begin(), by_right.end(),
            [&](Vertex a, Vertex b) { return layout.bar(a).x_right < layout.bar(b).x_right; });

  auto key = [&](Vertex v) { return std::make_pair(layout.bar(v).y, v); };
  std::set<std::pair<Rational, Vertex>> active;
  std::size_t li = 0, ri = 0;
  VisibilityWindow window;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    while (ri < by_right.size() && layout.bar(by_right[ri]).x_right <= xs[i]) active.erase(key(by_right[ri++]));
    while (li < by_left.size() && layout.bar(by_left[li]).x_left <= xs[i]) active.insert(key(by_left[li++]));
    if (active.empty()) continue;
    window.x_lo = xs[i];
    window.x_hi = xs[i + 1];
    window.stack.clear();
    for (const auto& [y, v] : active) window.stack.push_back(v);
    fn(static_cast<const VisibilityWindow&>(window));
  }
}

/// Strong bar k-visibility graph: u,v adjacent iff some open x-interval of
/// positive width is spanned by both bars and by at most k bars lying
/// strictly between them vertically.
inline Graph strong_visibility_graph(const BarLayout& layout, int k) {
  if (k < 0) throw PreconditionError("visibility parameter k must be non-negative");
  Graph g(static_cast<int>(layout.size()));
  sweep_windows(layout, [&](const VisibilityWindow& w) {
    const std::size_t h = w.stack.size();
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i + 1; j < h && j <= i + static_cast<std::size_t>(k) + 1; ++j)
        g.add_edge(w.stack[i], w.stack[j]);
  });
  return g;
}

struct RealizationReport {
  bool realized = false;
  std::vector<Edge> missing;
};

/// Whether `layout` is a weak bar k-visibility representation of g.
inline RealizationReport realizes_weakly(const BarLayout& layout, const Graph& g, int k) {
  if (static_cast<std::size_t>(g.num_vertices()) != layout.size())
    throw PreconditionError("layout has " + std::to_string(layout.size()) + " bars but graph has " +
                            std::to_string(g.num_vertices()) + " vertices");
  const Graph strong = strong_visibility_graph(layout, k);
  RealizationReport r;
  for (const Edge& e : g.edges())
    if (!strong.has_edge(e.u, e.v)) r.missing.push_back(e);
  r.realized = r.missing.empty();
  return r;
}

/// Bars strictly between u and v (in y) whose open x-range contains x, or
/// nullopt when x is not interior to both bars or u, v share a height.
inline std::optional<std::vector<Vertex>> bars_crossed_at(const BarLayout& layout, Vertex u, Vertex v,
                                                          const Rational& x) {
  const Bar& a = layout.bar(u);
  const Bar& b = layout.bar(v);
  if (a.y == b.y || !a.covers_open(x) || !b.covers_open(x)) return std::nullopt;
  const Rational lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
  std::vector<Vertex> crossed;
  for (const Bar& w : layout.bars())
    if (w.id != u && w.id != v && lo < w.y && w.y < hi && w.x_left <= x && x <= w.x_right) crossed.push_back(w.id);
  return crossed;
}

}  // namespace barvis

#endif  // BARVIS_BAR_LAYOUT_HPP
