#ifndef BARVIS_ONE_PLANAR_HPP
#define BARVIS_ONE_PLANAR_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "barvis/bar_layout.hpp"
#include "barvis/embedding.hpp"
#include "barvis/errors.hpp"
#include "barvis/graph.hpp"
#include "barvis/planarity.hpp"
#include "barvis/st_planar.hpp"

namespace barvis {

/// A crossing vertex x of the planarization where original edges `first`
/// and `second` cross. Its rotation alternates between their endpoints.
struct Crossing {
  Vertex x = 0;
  Edge first;
  Edge second;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Planarization of a 1-planar drawing. Vertices 0..num_original-1 are the
/// graph's vertices; crossing vertices have larger ids. Ids of crossings
/// that were undone stay behind as isolated vertices.
struct OnePlanarEmbedding {
  PlanarEmbedding planarization;
  int num_original = 0;
  std::vector<Crossing> crossings;

  friend bool operator==(const OnePlanarEmbedding&, const OnePlanarEmbedding&) = default;

  bool is_original(Vertex v) const { return v >= 0 && v < num_original; }

  /// The drawn graph: uncrossed edges between originals plus crossing pairs.
  Graph original_graph() const {
    Graph g(num_original);
    for (Vertex v = 0; v < num_original; ++v)
      for (Vertex w : planarization.rotation(v))
        if (is_original(w)) g.add_edge(v, w);
    for (const Crossing& c : crossings) {
      g.add_edge(c.first.u, c.first.v);
      g.add_edge(c.second.u, c.second.v);
    }
    return g;
  }

  /// Throws InvariantError on the first violated 1-planarity invariant.
  void validate() const {
    const int n = planarization.num_vertices();
    if (num_original < 0 || num_original > n) throw InvariantError("num_original out of range");
    std::set<Vertex> xs;
    std::set<Edge> crossed;
    for (const Crossing& c : crossings) {
      const std::string tag = "crossing vertex " + std::to_string(c.x);
      if (c.x < num_original || c.x >= n) throw InvariantError(tag + " has an original or out-of-range id");
      if (!xs.insert(c.x).second) throw InvariantError(tag + " listed twice");
      const auto& r = planarization.rotation(c.x);
      if (r.size() != 4) throw InvariantError(tag + " does not have degree 4");
      const Edge e02(r[0], r[2]), e13(r[1], r[3]);
      if (!((e02 == c.first && e13 == c.second) || (e02 == c.second && e13 == c.first)))
        throw InvariantError(tag + ": its two edges do not interleave in the rotation");
      for (Vertex w : r)
        if (!is_original(w)) throw InvariantError(tag + " is adjacent to non-original vertex " + std::to_string(w));
      if (r[0] == r[1] || r[0] == r[3] || r[2] == r[1] || r[2] == r[3])
        throw InvariantError(tag + ": crossing edges share an endpoint");
      for (const Edge& e : {c.first, c.second}) {
        if (!crossed.insert(e).second)
          throw InvariantError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is crossed more than once");
        if (planarization.has_edge(e.u, e.v))
          throw InvariantError("crossed edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                               " is also drawn uncrossed");
      }
    }
    for (Vertex v = num_original; v < n; ++v)
      if (!xs.count(v) && planarization.degree(v) != 0)
        throw InvariantError("vertex " + std::to_string(v) + " is neither original nor a crossing");
    for (Vertex v = 0; v < num_original; ++v)
      for (Vertex w : planarization.rotation(v))
        if (!is_original(w) && !xs.count(w))
          throw InvariantError("vertex " + std::to_string(v) + " adjacent to unknown vertex " + std::to_string(w));
    if (!planarization.satisfies_euler()) throw InvariantError("planarization rotation system is not planar");
  }
};

/// Wraps a plane graph with no crossings.
inline OnePlanarEmbedding crossing_free(PlanarEmbedding e) {
  OnePlanarEmbedding out;
  out.num_original = e.num_vertices();
  out.planarization = std::move(e);
  return out;
}

/// Adds the edge between the apexes b, d of the two triangular faces on the
/// uncrossed edge ac, crossing ac at a new vertex. Returns the crossing.
inline Crossing cross_edge(OnePlanarEmbedding& e, Vertex a, Vertex c) {
  PlanarEmbedding& p = e.planarization;
  if (!e.is_original(a) || !e.is_original(c) || !p.has_edge(a, c))
    throw PreconditionError("cross_edge: " + std::to_string(a) + "-" + std::to_string(c) + " is not an uncrossed edge");
  const auto left = p.face_walk(Dart{a, c});
  const auto right = p.face_walk(Dart{c, a});
  if (left.size() != 3 || right.size() != 3)
    throw PreconditionError("cross_edge: both faces on the edge must be triangles");
  const Vertex b = left[1].to, d = right[1].to;
  if (!e.is_original(b) || !e.is_original(d) || b == d || p.has_edge(b, d))
    throw PreconditionError("cross_edge: apexes " + std::to_string(b) + ", " + std::to_string(d) +
                            " cannot be joined");
  for (const Crossing& x : e.crossings)
    if (x.first == Edge(b, d) || x.second == Edge(b, d))
      throw PreconditionError("cross_edge: edge " + std::to_string(b) + "-" + std::to_string(d) + " already exists");

  const Vertex before_c_at_a = p.cw_prev(a, c);
  const Vertex before_a_at_c = p.cw_prev(c, a);
  const Vertex x = p.add_vertex();
  p.remove_edge(a, c);
  p.insert_edge(a, before_c_at_a, x, x);
  p.insert_edge(c, before_a_at_c, x, a);
  p.insert_edge(b, c, x, a);
  p.insert_edge(d, a, x, c);
  Crossing cr{x, Edge(a, c), Edge(b, d)};
  e.crossings.push_back(cr);
  return cr;
}

struct KiteChange {
  enum class Kind { inserted, rerouted, moved };
  Kind kind = Kind::inserted;
  Vertex crossing = 0;         // crossing vertex whose kite gained the edge
  Edge edge;                   // the kite edge
  std::optional<Edge> freed;   // rerouted: partner edge that became uncrossed
};

inline std::string to_string(KiteChange::Kind k) {
  switch (k) {
    case KiteChange::Kind::inserted:
      return "inserted";
    case KiteChange::Kind::rerouted:
      return "rerouted";
    case KiteChange::Kind::moved:
      return "moved";
  }
  return "?";
}

struct KiteResult {
  OnePlanarEmbedding embedding;
  std::vector<KiteChange> changes;
};

namespace detail {

/// Whether the face in the quadrant (p, q) at crossing x is the triangle x,q,p.
inline bool kite_hugs(const PlanarEmbedding& p, Vertex x, Vertex a, Vertex b) {
  return p.has_edge(a, b) && p.cw_next(b, x) == a && p.cw_next(a, b) == x;
}

/// Crossing vertex (other than `self`) whose triangle lies on a side of the
/// uncrossed edge ab, if any.
inline std::optional<Vertex> other_kite_on(const OnePlanarEmbedding& e, Vertex self, Vertex a, Vertex b) {
  for (const Dart& d : {Dart{a, b}, Dart{b, a}}) {
    const auto walk = e.planarization.face_walk(d);
    if (walk.size() != 3) continue;
    const Vertex apex = walk[1].to;
    if (apex != self && !e.is_original(apex)) return apex;
  }
  return std::nullopt;
}

}  // namespace detail

/// Makes every kite present, crossing-free and drawn inside its quadrant at
/// the crossing. Iterates until nothing changes: each round either adds a
/// kite edge or removes a crossing.
inline KiteResult kite_augment(OnePlanarEmbedding e) {
  e.validate();
  KiteResult out;
  PlanarEmbedding& p = e.planarization;
  auto crossing_with = [&](const Edge& pq) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < e.crossings.size(); ++i)
      if (e.crossings[i].first == pq || e.crossings[i].second == pq) return i;
    return std::nullopt;
  };
  auto insert_in_quadrant = [&](Vertex x, Vertex a, Vertex b) { p.insert_edge(a, p.cw_prev(a, x), b, x); };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < e.crossings.size() && !changed; ++ci) {
      const Vertex x = e.crossings[ci].x;
      for (int i = 0; i < 4 && !changed; ++i) {
        const Vertex a = p.rotation(x)[static_cast<std::size_t>(i)];
        const Vertex b = p.rotation(x)[static_cast<std::size_t>((i + 1) % 4)];
        if (detail::kite_hugs(p, x, a, b)) continue;
        const Edge ab(a, b);
        KiteChange change;
        change.crossing = x;
        change.edge = ab;
        if (auto yi = crossing_with(ab)) {
          // Undo the crossing on ab; its partner edge becomes a plain edge.
          const Crossing y = e.crossings[*yi];
          const Edge partner = y.first == ab ? y.second : y.first;
          p.remove_edge(a, y.x);
          p.remove_edge(b, y.x);
          if (p.has_edge(partner.u, partner.v)) {
            p.isolate(y.x);
          } else {
            p.dissolve(y.x);
          }
          e.crossings.erase(e.crossings.begin() + static_cast<std::ptrdiff_t>(*yi));
          insert_in_quadrant(x, a, b);
          change.kind = KiteChange::Kind::rerouted;
          change.freed = partner;
        } else if (p.has_edge(a, b)) {
          if (auto z = detail::other_kite_on(e, x, a, b))
            throw PreconditionError("kite edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " is needed inside the quadrants of both crossings " + std::to_string(x) +
                                    " and " + std::to_string(*z));
          p.remove_edge(a, b);
          insert_in_quadrant(x, a, b);
          change.kind = KiteChange::Kind::moved;
        } else {
          insert_in_quadrant(x, a, b);
          change.kind = KiteChange::Kind::inserted;
        }
        out.changes.push_back(change);
        changed = true;
      }
    }
  }
  e.validate();
  out.embedding = std::move(e);
  return out;
}

/// Directed path a -> u -> c -> v -> b replacing the crossed edge ab; cd is
/// the crossing partner, restored as a direct arc.
struct DummyPath {
  Vertex a = 0, u = 0, c = 0, v = 0, b = 0;
  Edge partner;
  std::vector<Vertex> path() const { return {a, u, c, v, b}; }
};

using DummyPathRegistry = std::vector<DummyPath>;

struct CrossingReplacement {
  StDigraph digraph;
  DummyPathRegistry registry;
  std::vector<Edge> augmentation;  // edges added to make the skeleton biconnected
  int num_original = 0;
};

/// st-orients the crossing-free skeleton and re-inserts every crossing as a
/// two-dummy directed path through one kite vertex.
inline CrossingReplacement replace_crossings(const OnePlanarEmbedding& e) {
  e.validate();
  const int n = e.num_original;
  const PlanarEmbedding& p = e.planarization;
  if (n < 2) throw PreconditionError("replace_crossings needs at least two vertices");
  for (const Crossing& c : e.crossings)
    for (int i = 0; i < 4; ++i) {
      const Vertex a = p.rotation(c.x)[static_cast<std::size_t>(i)];
      const Vertex b = p.rotation(c.x)[static_cast<std::size_t>((i + 1) % 4)];
      if (!detail::kite_hugs(p, c.x, a, b))
        throw PreconditionError("crossing " + std::to_string(c.x) + " lacks kite edge " + std::to_string(a) + "-" +
                                std::to_string(b) + " in its quadrant (run kite_augment first)");
    }

  CrossingReplacement out;
  out.num_original = n;

  // Skeleton: drop crossing vertices.
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : p.rotation(v))
      if (e.is_original(w)) rot[v].push_back(w);
  std::optional<Dart> outer;
  if (auto d = p.outer_dart(); d && e.is_original(d->from) && e.is_original(d->to)) outer = *d;
  PlanarEmbedding g0(std::move(rot), outer);

  // Corners of g0 inside a kite face: at n_i, the one after n_{i+1}.
  std::set<std::pair<Vertex, Vertex>> kite_corner;
  for (const Crossing& c : e.crossings) {
    const auto& r = p.rotation(c.x);
    for (std::size_t i = 0; i < 4; ++i) kite_corner.insert({r[i], r[(i + 1) % 4]});
  }
  auto free_corner = [&](Vertex v) -> std::optional<Vertex> {
    if (g0.degree(v) == 0) return v;
    for (Vertex w : g0.rotation(v))
      if (!kite_corner.count({v, w})) return w;
    return std::nullopt;
  };

  // Join components through corners outside every kite face, then close
  // cut vertices.
  {
    int comps = 0;
    const auto comp = connected_components(g0.graph(), &comps);
    std::vector<std::optional<std::pair<Vertex, Vertex>>> port(static_cast<std::size_t>(comps));
    for (Vertex v = 0; v < n; ++v)
      if (!port[comp[v]])
        if (auto w = free_corner(v)) port[comp[v]] = std::make_pair(v, *w);
    for (int k = 0; k < comps; ++k)
      if (!port[k] && comps > 1)
        throw PreconditionError("a component of the drawing has no face outside its kites to attach to");
    for (int k = 1; k < comps; ++k) {
      const auto [r0, a0] = *port[0];
      const auto [rk, ak] = *port[k];
      g0.insert_edge(r0, a0, rk, ak);
      out.augmentation.emplace_back(r0, rk);
    }
  }
  if (!g0.outer_dart()) g0.set_outer_dart(Dart{0, g0.rotation(0).front()});
  if (n >= 3) {
    auto aug = biconnect_planar_augment(std::move(g0));
    g0 = std::move(aug.embedding);
    out.augmentation.insert(out.augmentation.end(), aug.added.begin(), aug.added.end());
  }
  const Dart st = *g0.outer_dart();
  const StDigraph base = st_orient(g0, st.from, st.to);

  std::vector<int> order_pos(static_cast<std::size_t>(n));
  {
    const auto topo = *base.digraph.topological_order();
    for (std::size_t i = 0; i < topo.size(); ++i) order_pos[topo[i]] = static_cast<int>(i);
  }

  PlanarEmbedding fin = base.embedding;
  DiGraph arcs(n + 2 * static_cast<int>(e.crossings.size()));
  for (const Arc& a : base.digraph.arcs()) arcs.add_arc(a.tail, a.head);

  for (const Crossing& c : e.crossings) {
    const auto& r = p.rotation(c.x);
    std::optional<int> pick;
    bool forward = true;
    for (int i = 0; i < 4 && !pick; ++i) {
      const Vertex A = r[static_cast<std::size_t>((i + 3) % 4)], M = r[static_cast<std::size_t>(i)],
                   B = r[static_cast<std::size_t>((i + 1) % 4)];
      if (base.digraph.has_arc(A, M) && base.digraph.has_arc(M, B)) {
        pick = i;
        forward = true;
      } else if (base.digraph.has_arc(B, M) && base.digraph.has_arc(M, A)) {
        pick = i;
        forward = false;
      }
    }
    if (!pick)
      throw InternalError("kite around crossing " + std::to_string(c.x) + " has no two consecutive arcs in one direction");
    const int i = *pick;
    const Vertex A = r[static_cast<std::size_t>((i + 3) % 4)], M = r[static_cast<std::size_t>(i)],
                 B = r[static_cast<std::size_t>((i + 1) % 4)], D = r[static_cast<std::size_t>((i + 2) % 4)];
    if (fin.cw_next(A, M) != D || fin.cw_next(B, D) != M || fin.cw_next(M, B) != A || fin.cw_next(D, A) != B)
      throw InternalError("kite face around crossing " + std::to_string(c.x) + " was split");

    const Vertex du = fin.add_vertex();  // next to A
    const Vertex dv = fin.add_vertex();  // next to B
    fin.insert_edge(A, M, du, du);
    fin.insert_edge(B, D, dv, dv);
    fin.insert_edge(M, B, dv, B);
    const bool md_present = fin.has_edge(M, D);
    if (!md_present) fin.insert_edge(M, dv, D, A);
    fin.insert_edge(M, md_present ? dv : D, du, A);

    DummyPath dp;
    dp.c = M;
    dp.partner = Edge(M, D);
    if (forward) {
      dp.a = A, dp.u = du, dp.v = dv, dp.b = B;
    } else {
      dp.a = B, dp.u = dv, dp.v = du, dp.b = A;
    }
    const auto path = dp.path();
    for (std::size_t j = 0; j + 1 < path.size(); ++j) arcs.add_arc(path[j], path[j + 1]);
    if (!md_present) {
      if (order_pos[M] < order_pos[D]) {
        arcs.add_arc(M, D);
      } else {
        arcs.add_arc(D, M);
      }
    }
    out.registry.push_back(dp);
  }

  fin.set_outer_dart(st);
  out.digraph = StDigraph{std::move(fin), std::move(arcs), base.s, base.t};
  try {
    validate_st_digraph(out.digraph);
  } catch (const InvariantError& err) {
    throw InternalError(std::string("crossing replacement broke the st-digraph: ") + err.what());
  }
  return out;
}

struct WeB1Result {
  BarLayout layout;
  KiteResult kites;
  CrossingReplacement replacement;
  std::vector<Rational> path_x;  // per registry entry
};

/// Weak bar 1-visibility layout of a 1-planar graph g from its drawing e.
inline WeB1Result oneplanar_to_web1(const OnePlanarEmbedding& e, const Graph& g) {
  e.validate();
  const int n = g.num_vertices();
  if (e.num_original != n) throw PreconditionError("embedding and graph have different vertex counts");
  if (!(e.original_graph() == g)) throw PreconditionError("embedding does not draw the given graph");
  if (n >= 3 && static_cast<long>(g.num_edges()) > 4L * n - 8)
    throw PreconditionError("graph has " + std::to_string(g.num_edges()) + " edges, above the 1-planar bound 4n-8 = " +
                            std::to_string(4 * n - 8));
  WeB1Result out;
  if (n == 0) return out;
  if (n == 1) {
    out.layout = BarLayout({Bar{0, Rational(0), Rational(0), Rational(1)}});
    return out;
  }

  out.kites = kite_augment(e);
  out.replacement = replace_crossings(out.kites.embedding);
  PathFamily paths;
  for (const DummyPath& dp : out.replacement.registry) paths.push_back(dp.path());
  const AlignedLayout aligned = aligned_bar_layout(out.replacement.digraph, paths);
  out.layout = aligned.layout.prefix(n);
  out.path_x = aligned.path_x;

  for (std::size_t i = 0; i < out.replacement.registry.size(); ++i) {
    const DummyPath& dp = out.replacement.registry[i];
    const auto between = bars_crossed_at(out.layout, dp.a, dp.b, out.path_x[i]);
    if (!between || *between != std::vector<Vertex>{dp.c})
      throw InternalError("bars " + std::to_string(dp.a) + " and " + std::to_string(dp.b) +
                          " are not 1-visible through " + std::to_string(dp.c));
  }
  const auto report = realizes_weakly(out.layout, g, 1);
  if (!report.realized) throw InternalError("layout misses " + std::to_string(report.missing.size()) + " edges");
  return out;
}

}  // namespace barvis

#endif  // BARVIS_ONE_PLANAR_HPP
