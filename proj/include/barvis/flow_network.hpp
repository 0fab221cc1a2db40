#ifndef BARVIS_FLOW_NETWORK_HPP
#define BARVIS_FLOW_NETWORK_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "barvis/bar_layout.hpp"
#include "barvis/embedding.hpp"
#include "barvis/errors.hpp"
#include "barvis/geometry.hpp"
#include "barvis/graph.hpp"
#include "barvis/st_planar.hpp"

namespace barvis {

/// Upward straight-line drawing of a DAG in which every vertex has
/// min(indeg, outdeg) <= k.
struct FlowNetwork {
  DiGraph digraph;
  std::vector<Point> position;
  int k = 1;
  friend bool operator==(const FlowNetwork&, const FlowNetwork&) = default;
};

struct KFlowReport {
  bool ok = true;
  std::vector<Vertex> violating;
};

inline KFlowReport is_k_flow(const DiGraph& g, int k) {
  KFlowReport r;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (std::min(g.indeg(v), g.outdeg(v)) > k) r.violating.push_back(v);
  r.ok = r.violating.empty();
  return r;
}

/// Throws InvariantError unless the drawing is upward, planar and k-flow.
inline void validate_flow_network(const FlowNetwork& f) {
  const int n = f.digraph.num_vertices();
  if (static_cast<int>(f.position.size()) != n) throw InvariantError("flow network: one position per vertex required");
  {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const Point& p : f.position) pts.emplace_back(p.x, p.y);
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw InvariantError("flow network: two vertices share a position");
  }
  const auto arcs = f.digraph.arcs();
  for (const Arc& a : arcs)
    if (!(f.position[a.tail].y < f.position[a.head].y))
      throw InvariantError("flow network: arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                           " does not point upward");
  if (auto r = is_k_flow(f.digraph, f.k); !r.ok)
    throw InvariantError("flow network: vertex " + std::to_string(r.violating.front()) + " violates the " +
                         std::to_string(f.k) + "-flow bound");

  // Planarity of the drawing: sweep arcs by x-extent.
  struct Span {
    Rational lo, hi;
    std::size_t arc;
  };
  std::vector<Span> spans;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Point& p = f.position[arcs[i].tail];
    const Point& q = f.position[arcs[i].head];
    spans.push_back({std::min(p.x, q.x), std::max(p.x, q.x), i});
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < spans.size(); ++i)
    for (std::size_t j = i + 1; j < spans.size() && spans[j].lo <= spans[i].hi; ++j) {
      const Arc& a = arcs[spans[i].arc];
      const Arc& b = arcs[spans[j].arc];
      const Point &a1 = f.position[a.tail], &a2 = f.position[a.head];
      const Point &b1 = f.position[b.tail], &b2 = f.position[b.head];
      const bool share = a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head;
      if (share) {
        // Only overlap is possible: a far endpoint lying on the other arc.
        const Vertex a_far = (a.tail == b.tail || a.tail == b.head) ? a.head : a.tail;
        const Vertex b_far = (b.tail == a.tail || b.tail == a.head) ? b.head : b.tail;
        if (geom::on_segment(b1, b2, f.position[a_far]) || geom::on_segment(a1, a2, f.position[b_far]))
          throw InvariantError("flow network: arcs overlap");
      } else if (geom::segments_meet(a1, a2, b1, b2)) {
        throw InvariantError("flow network: arcs " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " and " +
                             std::to_string(b.tail) + "->" + std::to_string(b.head) + " cross");
      }
    }
  for (Vertex v = 0; v < n; ++v)
    for (const Span& s : spans) {
      if (f.position[v].x < s.lo || f.position[v].x > s.hi) continue;
      const Arc& a = arcs[s.arc];
      if (a.tail != v && a.head != v && geom::on_segment(f.position[a.tail], f.position[a.head], f.position[v]))
        throw InvariantError("flow network: vertex " + std::to_string(v) + " lies on an arc");
    }
}

/// Rotation system read off the drawing: neighbours in clockwise angular order.
inline PlanarEmbedding geometric_embedding(const FlowNetwork& f) {
  const Graph g = f.digraph.underlying();
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    const Point& o = f.position[v];
    std::sort(rot[v].begin(), rot[v].end(), [&](Vertex a, Vertex b) {
      const Point& pa = f.position[a];
      const Point& pb = f.position[b];
      return geom::ccw_less(pb.x - o.x, pb.y - o.y, pa.x - o.x, pa.y - o.y);
    });
  }
  return PlanarEmbedding(std::move(rot));
}

struct StAugmentation {
  StDigraph st;
  std::vector<Arc> added;
  /// Ids >= num_original are the extra poles s* (below) and t* (above).
  int num_original = 0;
};

namespace detail {

class FlowAugmenter {
 public:
  explicit FlowAugmenter(const FlowNetwork& f)
      : f_(f), pos_(f.position), emb_(geometric_embedding(f)), g_(f.digraph), original_rot_(emb_.rotations()) {}

  StAugmentation run() {
    n_ = g_.num_vertices();
    for (Vertex v = 0; v < n_; ++v)
      if (g_.indeg(v) + g_.outdeg(v) == 0)
        throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
    label_drawing();
    Rational lo = pos_[0].y, hi = pos_[0].y;
    for (const Point& p : pos_) {
      lo = std::min(lo, p.y);
      hi = std::max(hi, p.y);
    }
    t_star_ = add_pole({Rational(0), hi + Rational(1)});
    s_star_ = add_pole({Rational(0), lo - Rational(1)});
    attach_escaping(true);
    attach_escaping(false);
    link_components();
    saturate();
    return finish();
  }

 private:
  using CornerKey = std::pair<Vertex, Vertex>;  // (v, in_from): the gap clockwise after in_from around v

  bool key_less(Vertex a, Vertex b) const {
    return std::tie(pos_[a].y, pos_[a].x, a) < std::tie(pos_[b].y, pos_[b].x, b);
  }

  Point dir(Vertex from, Vertex to) const { return {pos_[to].x - pos_[from].x, pos_[to].y - pos_[from].y}; }
  static Point up() { return {Rational(0), Rational(1)}; }
  static Point down() { return {Rational(0), Rational(-1)}; }

  /// Whether direction d lies in the clockwise gap from a to b around v.
  bool in_gap(Vertex v, Vertex a, Vertex b, const Point& d) const {
    if (a == b) return true;
    return geom::ccw_before(dir(v, a), dir(v, b), d);
  }

  /// Original neighbour a of v such that d lies in the gap after a.
  Vertex gap_anchor(Vertex v, const Point& d) const {
    const auto& r = original_rot_[v];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (in_gap(v, r[i], r[(i + 1) % r.size()], d)) return r[i];
    throw InternalError("direction coincides with an arc");
  }

  /// Like gap_anchor, but over the current rotation with pole rays taken
  /// as vertical; other added arcs are skipped.
  Vertex current_gap(Vertex v, const Point& d) const {
    std::vector<std::pair<Vertex, Point>> known;
    for (Vertex w : emb_.rotation(v)) {
      if (w == t_star_) {
        known.emplace_back(w, up());
      } else if (w == s_star_) {
        known.emplace_back(w, down());
      } else if (std::find(original_rot_[v].begin(), original_rot_[v].end(), w) != original_rot_[v].end()) {
        known.emplace_back(w, dir(v, w));
      }
    }
    if (known.size() == 1) return known[0].first;
    for (std::size_t i = 0; i < known.size(); ++i)
      if (geom::ccw_before(known[i].second, known[(i + 1) % known.size()].second, d)) return known[i].first;
    throw InternalError("direction coincides with an arc");
  }

  Vertex add_pole(Point p) {
    pos_.push_back(p);
    g_.add_vertex();
    return emb_.add_vertex();
  }

  // Switch corners of the straight drawing: large when the gap holds the
  // vertical direction pointing away from both arcs.
  void label_drawing() {
    for (Vertex v = 0; v < n_; ++v) {
      const auto& r = original_rot_[v];
      for (std::size_t i = 0; i < r.size(); ++i) {
        const Vertex a = r[i], b = r[(i + 1) % r.size()];
        if (g_.has_arc(a, v) && g_.has_arc(b, v)) large_[{v, a}] = in_gap(v, a, b, up());
        if (g_.has_arc(v, a) && g_.has_arc(v, b)) large_[{v, a}] = in_gap(v, a, b, down());
      }
    }
  }

  enum class Switch { none, sink, source };

  Switch switch_at(Vertex v, Vertex in_from, Vertex out_to) const {
    if (g_.has_arc(in_from, v) && g_.has_arc(out_to, v)) return Switch::sink;
    if (g_.has_arc(v, in_from) && g_.has_arc(v, out_to)) return Switch::source;
    return Switch::none;
  }

  /// Arc between corner (v, v_after) and corner (w, w_after), pointing from
  /// v when `v_is_tail`. A split switch corner at the head of a sink arc
  /// (tail of a source arc) keeps its label on both sides.
  void link(Vertex v, Vertex v_after, Vertex w, Vertex w_after, bool v_is_tail) {
    emb_.insert_edge(v, v_after, w, w_after);
    const Arc a = v_is_tail ? Arc{v, w} : Arc{w, v};
    g_.add_arc(a.tail, a.head);
    added_.push_back(a);
    for (auto [x, x_after, y] : {std::tuple{v, v_after, w}, std::tuple{w, w_after, v}}) {
      auto it = large_.find({x, x_after});
      if (it == large_.end()) continue;
      const bool was = it->second;
      large_.erase(it);
      const Vertex nxt = emb_.cw_next(x, y);
      if (switch_at(x, x_after, y) != Switch::none) large_[{x, x_after}] = was;
      if (switch_at(x, y, nxt) != Switch::none) large_[{x, y}] = false;
    }
  }

  /// Whether the vertical ray from v upward (downward) meets no input vertex or arc.
  bool escapes(Vertex v, bool up_dir) const {
    const Point& o = pos_[v];
    for (Vertex w = 0; w < n_; ++w)
      if (w != v && pos_[w].x == o.x && (up_dir ? pos_[w].y > o.y : pos_[w].y < o.y)) return false;
    for (const Arc& a : f_.digraph.arcs()) {
      const Point& p = pos_[a.tail];
      const Point& q = pos_[a.head];
      if (!(std::min(p.x, q.x) < o.x && o.x < std::max(p.x, q.x))) continue;
      const Rational y = p.y + (o.x - p.x) * (q.y - p.y) / (q.x - p.x);
      if (up_dir ? y > o.y : y < o.y) return false;
    }
    return true;
  }

  /// Sinks (sources) with a free vertical ray go straight to t* (from s*).
  /// Around t* they appear right to left, around s* left to right; the pole
  /// corner between the two extreme rays is its large one.
  void attach_escaping(bool sinks) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n_; ++v)
      if ((sinks ? g_.outdeg(v) : g_.indeg(v)) == 0 && escapes(v, sinks)) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
      return sinks ? pos_[b].x < pos_[a].x : pos_[a].x < pos_[b].x;
    });
    const Vertex pole = sinks ? t_star_ : s_star_;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Vertex v = vs[i];
      const Vertex a = gap_anchor(v, sinks ? up() : down());
      large_.erase({v, a});
      emb_.insert_edge(v, a, pole, i == 0 ? pole : vs[i - 1]);
      if (sinks) {
        g_.add_arc(v, pole);
        added_.push_back({v, pole});
      } else {
        g_.add_arc(pole, v);
        added_.push_back({pole, v});
      }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) large_[{pole, vs[i]}] = i + 1 == vs.size();
  }

  struct SwitchCorner {
    Vertex v;
    Vertex in_from;
    Switch kind;
    bool large;
  };

  std::vector<SwitchCorner> switches_of(const std::vector<Dart>& walk) const {
    std::vector<SwitchCorner> out;
    for (std::size_t j = 0; j < walk.size(); ++j) {
      const Vertex v = walk[j].to, a = walk[j].from, b = walk[(j + 1) % walk.size()].to;
      const Switch k = switch_at(v, a, b);
      if (k == Switch::none) continue;
      auto it = large_.find({v, a});
      if (it == large_.end())
        throw InternalError("switch corner at vertex " + std::to_string(v) + " has no angle label");
      out.push_back({v, a, k, it->second});
    }
    return out;
  }

  /// Components not reached from t* are attached, top vertex first, to a
  /// small sink corner of the face their top vertex's ray runs into.
  void link_components() {
    for (;;) {
      int comps = 0;
      const auto comp = connected_components(g_.underlying(), &comps);
      Vertex tc = -1;
      for (Vertex v = 0; v < n_; ++v)
        if (comp[v] != comp[t_star_] && g_.outdeg(v) == 0 && (tc < 0 || key_less(tc, v))) tc = v;
      if (tc < 0) return;

      const Point& o = pos_[tc];
      std::optional<std::pair<Rational, Dart>> hit;  // height and a dart with the hit face on its left
      Vertex above = -1;
      for (Vertex w = 0; w < n_; ++w)
        if (comp[w] != comp[tc] && pos_[w].x == o.x && pos_[w].y > o.y && (above < 0 || pos_[w].y < pos_[above].y))
          above = w;
      if (above >= 0) hit = {{pos_[above].y, Dart{above, emb_.cw_next(above, current_gap(above, down()))}}};
      for (const Arc& a : f_.digraph.arcs()) {
        if (comp[a.tail] == comp[tc]) continue;
        const Point& p = pos_[a.tail];
        const Point& q = pos_[a.head];
        if (!(std::min(p.x, q.x) < o.x && o.x < std::max(p.x, q.x))) continue;
        const Rational y = p.y + (o.x - p.x) * (q.y - p.y) / (q.x - p.x);
        if (y <= o.y || (hit && hit->first <= y)) continue;
        // Right to left keeps the region below the arc on the left.
        hit = {{y, p.x < q.x ? Dart{a.head, a.tail} : Dart{a.tail, a.head}}};
      }
      if (!hit) throw InternalError("vertex " + std::to_string(tc) + " neither escapes nor hits anything");

      std::optional<SwitchCorner> target;
      std::optional<SwitchCorner> pole_corner;
      for (const SwitchCorner& c : switches_of(emb_.face_walk(hit->second))) {
        if (c.kind != Switch::sink) continue;
        if (c.v == t_star_ && c.large) pole_corner = c;
        if (!c.large && (!target || key_less(target->v, c.v))) target = c;
      }
      if (!target) target = pole_corner;
      if (!target) throw InternalError("no sink corner above the component of vertex " + std::to_string(tc));
      const Vertex a = gap_anchor(tc, up());
      large_.erase({tc, a});
      const bool pole_large = target->large;
      link(tc, a, target->v, target->in_from, true);
      if (pole_large) large_[{target->v, target->in_from}] = true;
    }
  }

  /// Adds arcs between a large switch and the switch two steps away along
  /// the face while the step between is small, until every face is bounded
  /// by one increasing and one decreasing chain. On the outer face the far
  /// switch may be the large corner of the pole.
  void saturate() {
    for (bool changed = true; changed;) {
      changed = false;
      const auto faces = emb_.faces();
      for (const auto& walk : faces.walks) {
        const auto sw = switches_of(walk);
        const std::size_t k = sw.size();
        if (k <= 2) continue;
        for (std::size_t i = 0; i < k && !changed; ++i) {
          const SwitchCorner& s0 = sw[i];
          if (!s0.large || s0.v == t_star_ || s0.v == s_star_) continue;
          for (int step : {1, -1}) {
            const SwitchCorner& s1 = sw[(i + k + static_cast<std::size_t>(step)) % k];
            const SwitchCorner& s2 = sw[(i + k + static_cast<std::size_t>(2 * step)) % k];
            const Vertex pole = s0.kind == Switch::sink ? t_star_ : s_star_;
            // Large, small, then either small or the large corner of the matching pole.
            const bool to_pole = s2.large && s2.v == pole;
            if (s1.large || (s2.large && !to_pole) || s0.v == s2.v || emb_.has_edge(s0.v, s2.v)) continue;
            link(s0.v, s0.in_from, s2.v, s2.in_from, s0.kind == Switch::sink);
            if (to_pole) {
              // The part of the pole corner facing s1 closes a small face.
              const CornerKey near = step == 1 ? CornerKey{s2.v, s2.in_from} : CornerKey{s2.v, s0.v};
              const CornerKey far = step == 1 ? CornerKey{s2.v, s0.v} : CornerKey{s2.v, s2.in_from};
              large_[near] = false;
              large_[far] = true;
            }
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
    for (const auto& walk : emb_.faces().walks)
      if (switches_of(walk).size() > 2) throw InternalError("a face could not be saturated");
  }

  /// Drops a pole with a single neighbour and renumbers the other pole.
  StAugmentation finish() {
    std::vector<bool> keep(static_cast<std::size_t>(n_ + 2), true);
    Vertex s = s_star_, t = t_star_;
    if (g_.indeg(t_star_) == 1) {
      t = g_.in_neighbors(t_star_).front();
      keep[t_star_] = false;
    }
    if (g_.outdeg(s_star_) == 1) {
      s = g_.out_neighbors(s_star_).front();
      keep[s_star_] = false;
    }
    for (Vertex p : {t_star_, s_star_})
      if (!keep[p]) {
        for (Vertex w : std::vector<Vertex>(emb_.rotation(p))) {
          emb_.remove_edge(p, w);
          g_.remove_arc(p, w);
          g_.remove_arc(w, p);
        }
        added_.erase(std::remove_if(added_.begin(), added_.end(),
                                    [&](const Arc& a) { return a.tail == p || a.head == p; }),
                     added_.end());
      }

    std::vector<Vertex> id(keep.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < keep.size(); ++v)
      if (keep[v]) id[v] = next++;
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(next));
    DiGraph g(next);
    for (std::size_t v = 0; v < keep.size(); ++v) {
      if (!keep[v]) continue;
      for (Vertex w : emb_.rotation(static_cast<Vertex>(v))) rot[id[v]].push_back(id[w]);
      for (Vertex w : g_.out_neighbors(static_cast<Vertex>(v))) g.add_arc(id[v], id[w]);
    }
    StAugmentation out;
    out.num_original = n_;
    for (const Arc& a : added_) out.added.push_back({id[a.tail], id[a.head]});
    // The rotation system fixes the sphere embedding; any face through both
    // poles can serve as the outer one.
    PlanarEmbedding emb(std::move(rot));
    for (const auto& walk : emb.faces().walks) {
      bool has_s = false, has_t = false;
      for (const Dart& d : walk) {
        has_s = has_s || d.from == id[s];
        has_t = has_t || d.from == id[t];
      }
      if (has_s && has_t) {
        emb.set_outer_dart(walk.front());
        break;
      }
    }
    if (!emb.outer_dart()) throw InternalError("no face contains both poles");
    out.st = StDigraph{std::move(emb), std::move(g), id[s], id[t]};
    try {
      validate_st_digraph(out.st);
    } catch (const InvariantError& e) {
      throw InternalError(std::string("augmentation did not produce an st-digraph: ") + e.what());
    }
    if (!is_k_flow(out.st.digraph, 1).ok) throw InternalError("augmentation broke the 1-flow property");
    return out;
  }

  const FlowNetwork& f_;
  std::vector<Point> pos_;
  PlanarEmbedding emb_;
  DiGraph g_;
  std::vector<std::vector<Vertex>> original_rot_;
  std::map<CornerKey, bool> large_;
  std::vector<Arc> added_;
  int n_ = 0;
  Vertex t_star_ = 0, s_star_ = 0;
};

}  // namespace detail

/// Extends a drawn 1-flow network without isolated vertices to an
/// st-digraph that is still 1-flow. Sinks (sources) whose vertical ray
/// escapes the drawing are joined to an extra pole t* (s*), components are
/// linked, and faces are then saturated switch by switch; each added arc
/// leaves a sink or enters a source. A pole with a single neighbour is
/// dropped.
inline StAugmentation st_augment_1flow(const FlowNetwork& f) {
  validate_flow_network(f);
  if (!is_k_flow(f.digraph, 1).ok) throw PreconditionError("network is not 1-flow");
  if (f.digraph.num_vertices() < 2) throw PreconditionError("st-augmentation needs at least two vertices");
  return detail::FlowAugmenter(f).run();
}

struct FlowSquareResult {
  Graph square;
  BarLayout layout;
  StAugmentation augmentation;  // over the non-isolated vertices, renumbered
  std::vector<Vertex> isolated;
};

/// Weak bar 1-visibility layout of the square of a 1-flow network. Isolated
/// vertices get private bars above and to the right of everything else.
inline FlowSquareResult flow_square_to_web1(const FlowNetwork& f) {
  validate_flow_network(f);
  FlowSquareResult out;
  out.square = square_of_digraph(f.digraph);
  const int n = f.digraph.num_vertices();
  std::vector<Vertex> id(static_cast<std::size_t>(n), -1);
  FlowNetwork core;
  core.k = f.k;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (f.digraph.indeg(v) + f.digraph.outdeg(v) == 0) {
      out.isolated.push_back(v);
      continue;
    }
    id[v] = static_cast<Vertex>(kept.size());
    kept.push_back(v);
    core.position.push_back(f.position[v]);
  }
  core.digraph = DiGraph(static_cast<int>(kept.size()));
  for (const Arc& a : f.digraph.arcs()) core.digraph.add_arc(id[a.tail], id[a.head]);

  std::vector<Bar> bars(static_cast<std::size_t>(n));
  Rational top(0), right(0);
  if (!kept.empty()) {
    out.augmentation = st_augment_1flow(core);
    const BarLayout full = tt_bar_layout(out.augmentation.st).layout;
    const DiGraph& g = out.augmentation.st.digraph;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.indeg(v) != 1) continue;
      const Bar& bv = full.bar(v);
      const Bar& bu = full.bar(g.in_neighbors(v).front());
      if (bv.x_left < bu.x_left || bv.x_right > bu.x_right)
        throw InternalError("bar " + std::to_string(v) + " is not nested in its only predecessor's bar");
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      Bar b = full.bar(static_cast<Vertex>(i));
      b.id = kept[i];
      top = std::max(top, b.y);
      right = std::max(right, b.x_right);
      bars[kept[i]] = b;
    }
  }
  for (Vertex v : out.isolated) {
    top = top + Rational(1);
    right = right + Rational(1);
    bars[v] = Bar{v, top, right, right + Rational(1)};
    right = right + Rational(1);
  }
  out.layout = BarLayout(std::move(bars));
  const auto report = realizes_weakly(out.layout, out.square, 1);
  if (!report.realized) throw InternalError("square misses " + std::to_string(report.missing.size()) + " edges");
  return out;
}

struct GridStats {
  int m = 0;
  int n = 0;
  std::size_t square_edges = 0;
  long bound_6n_20 = 0;
  std::map<int, int> interior_out_degree;  // square out-degree -> count
};

struct GridCounterexample {
  FlowNetwork network;
  GridStats stats;
};

/// m x m grid turned by 45 degrees: vertex (i,j) sits at (i-j, i+j) with
/// arcs to (i+1,j) and (i,j+1); cells in rows with even i also get the
/// vertical diagonal (i,j) -> (i+1,j+1). Every vertex is 2-flow.
inline GridCounterexample grid_2flow_counterexample(int m) {
  if (m < 3) throw PreconditionError("grid side must be at least 3");
  GridCounterexample out;
  const int n = m * m;
  auto id = [m](int i, int j) { return i * m + j; };
  FlowNetwork& f = out.network;
  f.k = 2;
  f.digraph = DiGraph(n);
  f.position.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      f.position[id(i, j)] = {Rational(i - j), Rational(i + j)};
      if (i + 1 < m) f.digraph.add_arc(id(i, j), id(i + 1, j));
      if (j + 1 < m) f.digraph.add_arc(id(i, j), id(i, j + 1));
      if (i % 2 == 0 && i + 1 < m && j + 1 < m) f.digraph.add_arc(id(i, j), id(i + 1, j + 1));
    }
  validate_flow_network(f);

  GridStats& s = out.stats;
  s.m = m;
  s.n = n;
  s.square_edges = square_of_digraph(f.digraph).num_edges();
  s.bound_6n_20 = 6L * n - 20;
  for (int i = 0; i + 2 < m; ++i)
    for (int j = 0; j + 2 < m; ++j) {
      std::set<Vertex> reach;
      for (Vertex w : f.digraph.out_neighbors(id(i, j))) {
        reach.insert(w);
        for (Vertex x : f.digraph.out_neighbors(w)) reach.insert(x);
      }
      ++s.interior_out_degree[static_cast<int>(reach.size())];
    }
  return out;
}

/// Random drawn k-flow network: distinct lattice points in [0, span]^2 and
/// straight upward arcs added in random order while the drawing stays
/// planar and every vertex stays within the flow bound.
inline FlowNetwork random_flow_network(std::mt19937& rng, int n, int span, int k = 1, double density = 1.0) {
  if (n < 1 || span < 0 || static_cast<long>(span + 1) * (span + 1) < n)
    throw PreconditionError("cannot place " + std::to_string(n) + " distinct points in the grid");
  FlowNetwork f;
  f.k = k;
  f.digraph = DiGraph(n);
  std::set<std::pair<int, int>> used;
  std::uniform_int_distribution<int> coord(0, span);
  while (static_cast<int>(f.position.size()) < n) {
    const int x = coord(rng), y = coord(rng);
    if (used.insert({x, y}).second) f.position.push_back({Rational(x), Rational(y)});
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (f.position[u].y != f.position[v].y) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs) {
    if (!keep(rng)) continue;
    const Vertex tail = f.position[u].y < f.position[v].y ? u : v;
    const Vertex head = tail == u ? v : u;
    const Point &p = f.position[tail], &q = f.position[head];
    bool ok = true;
    for (Vertex w = 0; w < n && ok; ++w)
      if (w != tail && w != head && geom::on_segment(p, q, f.position[w])) ok = false;
    for (const Arc& a : arcs) {
      if (!ok) break;
      if (a.tail == tail || a.tail == head || a.head == tail || a.head == head) continue;
      if (geom::segments_meet(p, q, f.position[a.tail], f.position[a.head])) ok = false;
    }
    if (!ok) continue;
    f.digraph.add_arc(tail, head);
    if (std::min(f.digraph.indeg(tail), f.digraph.outdeg(tail)) > k ||
        std::min(f.digraph.indeg(head), f.digraph.outdeg(head)) > k) {
      f.digraph.remove_arc(tail, head);
      continue;
    }
    arcs.push_back({tail, head});
  }
  return f;
}

}  // namespace barvis

#endif  // BARVIS_FLOW_NETWORK_HPP
