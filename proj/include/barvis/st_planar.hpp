#ifndef BARVIS_ST_PLANAR_HPP
#define BARVIS_ST_PLANAR_HPP

#include <algorithm>
#include <list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barvis/bar_layout.hpp"
#include "barvis/embedding.hpp"
#include "barvis/errors.hpp"
#include "barvis/graph.hpp"
#include "barvis/rational.hpp"

namespace barvis {

/// Embedded planar DAG with a single source s and single sink t, both on the
/// outer face. `embedding` carries the rotation system and the outer face;
/// `digraph` orients every embedding edge.
struct StDigraph {
  PlanarEmbedding embedding;
  DiGraph digraph;
  Vertex s = 0;
  Vertex t = 0;
};

namespace detail {

/// Cyclic number of in->out switches in v's rotation. Bimodal vertices with
/// both kinds of arcs have exactly one switch in each direction.
inline int in_out_switches(const StDigraph& d, Vertex v) {
  const auto& rot = d.embedding.rotation(v);
  int switches = 0;
  for (std::size_t i = 0; i < rot.size(); ++i) {
    bool prev_in = d.digraph.has_arc(rot[(i + rot.size() - 1) % rot.size()], v);
    bool cur_in = d.digraph.has_arc(rot[i], v);
    if (prev_in && !cur_in) ++switches;
  }
  return switches;
}

}  // namespace detail

/// Throws InvariantError describing the first violated st-digraph invariant.
inline void validate_st_digraph(const StDigraph& d) {
  const int n = d.embedding.num_vertices();
  if (d.digraph.num_vertices() != n) throw InvariantError("st-digraph: embedding and digraph sizes differ");
  if (!(d.digraph.underlying() == d.embedding.graph()))
    throw InvariantError("st-digraph: orientation does not match embedding edges");
  if (!d.digraph.is_acyclic()) throw InvariantError("st-digraph: contains a directed cycle");
  if (d.digraph.sources() != std::vector<Vertex>{d.s})
    throw InvariantError("st-digraph: s is not the unique source");
  if (d.digraph.sinks() != std::vector<Vertex>{d.t}) throw InvariantError("st-digraph: t is not the unique sink");
  if (!d.embedding.satisfies_euler()) throw InvariantError("st-digraph: rotation system is not planar");
  const auto outer = walk_vertices(d.embedding.outer_face());
  if (std::find(outer.begin(), outer.end(), d.s) == outer.end() ||
      std::find(outer.begin(), outer.end(), d.t) == outer.end())
    throw InvariantError("st-digraph: s and t must lie on the outer face");
  for (Vertex v = 0; v < n; ++v) {
    if (v == d.s || v == d.t) continue;
    if (detail::in_out_switches(d, v) != 1)
      throw InvariantError("st-digraph: incoming arcs of vertex " + std::to_string(v) + " are not consecutive");
  }
}

/// Orients a biconnected plane graph so that it becomes an st-digraph with
/// source s and sink t. {s,t} must be an edge on the outer face (when the
/// embedding has no outer face yet, the face left of s->t is chosen).
/// Uses the Even-Tarjan st-numbering; DFS explores neighbours in rotation
/// order, so the result is deterministic.
inline StDigraph st_orient(PlanarEmbedding e, Vertex s, Vertex t) {
  const int n = e.num_vertices();
  if (s == t || s < 0 || t < 0 || s >= n || t >= n) throw PreconditionError("st_orient: invalid s/t");
  if (!e.has_edge(s, t)) throw PreconditionError("st_orient: s and t must be adjacent");
  if (!e.outer_dart()) e.set_outer_dart({s, t});
  {
    const auto outer = e.outer_face();
    bool on_outer = std::any_of(outer.begin(), outer.end(), [&](const Dart& d) {
      return (d.from == s && d.to == t) || (d.from == t && d.to == s);
    });
    if (!on_outer) throw PreconditionError("st_orient: edge {s,t} is not on the outer face");
  }
  const Graph g = e.graph();
  if (!is_biconnected(g)) throw PreconditionError("st_orient: graph is not biconnected");

  std::vector<int> pre(n, -1);
  std::vector<Vertex> parent(n, -1), low(n, -1), preorder;
  preorder.reserve(n);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  // Rotation of s starting at t so that s-t is the first tree edge.
  auto children_of = [&](Vertex v) {
    std::vector<Vertex> order = e.rotation(v);
    if (v == s) std::rotate(order.begin(), std::find(order.begin(), order.end(), t), order.end());
    return order;
  };
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = children_of(v);

  int clock = 0;
  std::vector<Frame> stack{{s, 0}};
  pre[s] = clock++;
  low[s] = s;
  preorder.push_back(s);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    if (f.next < adj[v].size()) {
      const Vertex w = adj[v][f.next++];
      if (pre[w] == -1) {
        parent[w] = v;
        pre[w] = clock++;
        low[w] = w;
        preorder.push_back(w);
        stack.push_back({w, 0});
      } else if (w != parent[v] && pre[w] < pre[low[v]]) {
        low[v] = w;
      }
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) {
      const Vertex p = stack.back().v;
      if (pre[low[v]] < pre[low[p]]) low[p] = low[v];
    }
  }

  std::list<Vertex> order{s, t};
  std::vector<std::list<Vertex>::iterator> where(n);
  where[s] = order.begin();
  where[t] = std::next(order.begin());
  std::vector<bool> minus(n, false);
  minus[s] = true;
  for (Vertex v : preorder) {
    if (v == s || v == t) continue;
    const Vertex p = parent[v];
    if (minus[low[v]]) {
      where[v] = order.insert(where[p], v);
      minus[p] = false;
    } else {
      where[v] = order.insert(std::next(where[p]), v);
      minus[p] = true;
    }
  }
  std::vector<int> number(n);
  int pos = 0;
  for (Vertex v : order) number[v] = pos++;

  StDigraph d;
  d.digraph = DiGraph(n);
  for (const Edge& ed : g.edges()) {
    if (number[ed.u] < number[ed.v])
      d.digraph.add_arc(ed.u, ed.v);
    else
      d.digraph.add_arc(ed.v, ed.u);
  }
  d.embedding = std::move(e);
  d.s = s;
  d.t = t;
  validate_st_digraph(d);
  return d;
}

/// Dual of an st-digraph. The outer face is split into a left part (source
/// of the dual) and a right part (sink of the dual); every primal arc is
/// crossed by a dual arc from its left face to its right face.
struct StDual {
  int num_faces = 0;  // dual vertices, including the two outer halves
  int left_outer = 0;
  int right_outer = 0;
  std::map<Arc, int> left_face;
  std::map<Arc, int> right_face;
  std::vector<int> left_of_vertex;
  std::vector<int> right_of_vertex;
  DiGraph digraph;
};

/// Optimal topological numberings: psi on primal vertices, chi on dual ones.
struct Numberings {
  std::vector<int> psi;
  std::vector<int> chi;
};

struct DualWithNumberings {
  StDual dual;
  Numberings numbers;
};

inline DualWithNumberings dual_with_numberings(const StDigraph& d) {
  const int n = d.embedding.num_vertices();
  const auto faces = d.embedding.faces();
  const int outer = faces.face_of.at(*d.embedding.outer_dart());

  StDual dual;
  std::vector<int> compact(faces.walks.size(), -1);
  int next = 0;
  for (std::size_t f = 0; f < faces.walks.size(); ++f)
    if (static_cast<int>(f) != outer) compact[f] = next++;
  dual.left_outer = next++;
  dual.right_outer = next++;
  dual.num_faces = next;
  dual.digraph = DiGraph(next);

  for (const Arc& a : d.digraph.arcs()) {
    const int fl = faces.face_of.at(Dart{a.tail, a.head});
    const int fr = faces.face_of.at(Dart{a.head, a.tail});
    const int lf = fl == outer ? dual.left_outer : compact[fl];
    const int rf = fr == outer ? dual.right_outer : compact[fr];
    dual.left_face[a] = lf;
    dual.right_face[a] = rf;
    if (lf == rf) throw InvariantError("st-digraph: arc with the same face on both sides (bridge)");
    if (!dual.digraph.has_arc(lf, rf)) dual.digraph.add_arc(lf, rf);
  }

  dual.left_of_vertex.assign(n, dual.left_outer);
  dual.right_of_vertex.assign(n, dual.right_outer);
  for (Vertex v = 0; v < n; ++v) {
    if (v == d.s || v == d.t) continue;
    const auto& rot = d.embedding.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Vertex prev = rot[(i + rot.size() - 1) % rot.size()];
      const Vertex cur = rot[i];
      const bool prev_in = d.digraph.has_arc(prev, v);
      const bool cur_in = d.digraph.has_arc(cur, v);
      if (prev_in && !cur_in) dual.left_of_vertex[v] = dual.left_face.at(Arc{v, cur});
      if (!prev_in && cur_in) dual.right_of_vertex[v] = dual.right_face.at(Arc{cur, v});
    }
  }

  DualWithNumberings out;
  out.numbers.psi = d.digraph.longest_path_layers();
  out.numbers.chi = dual.digraph.longest_path_layers();
  out.dual = std::move(dual);
  return out;
}

/// Visibility representation of an st-digraph: vertex v becomes the bar
/// [2 chi(left v), 2 chi(right v) - 1] at height psi(v); the arc e is seen
/// through the strip [2 chi(left e), 2 chi(right e) - 1].
struct StripLayout {
  BarLayout layout;
  std::map<Arc, std::pair<Rational, Rational>> strips;
};

inline StripLayout tt_bar_layout(const StDigraph& d) {
  const auto [dual, num] = dual_with_numberings(d);
  std::vector<Bar> bars;
  bars.reserve(static_cast<std::size_t>(d.embedding.num_vertices()));
  for (Vertex v = 0; v < d.embedding.num_vertices(); ++v)
    bars.push_back(Bar{v, Rational(num.psi[v]), Rational(2 * num.chi[dual.left_of_vertex[v]]),
                       Rational(2 * num.chi[dual.right_of_vertex[v]] - 1)});
  StripLayout out{BarLayout(std::move(bars)), {}};
  for (const Arc& a : d.digraph.arcs())
    out.strips[a] = {Rational(2 * num.chi[dual.left_face.at(a)]), Rational(2 * num.chi[dual.right_face.at(a)] - 1)};
  return out;
}

/// Directed paths (vertex sequences) in an st-digraph.
using PathFamily = std::vector<std::vector<Vertex>>;

/// Checks that every path follows arcs of d, that no arc is used twice and
/// that no two paths cross at a shared vertex. Throws PreconditionError
/// naming the offending path(s).
inline void validate_path_family(const StDigraph& d, const PathFamily& paths) {
  std::map<Arc, std::size_t> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (p.size() < 2) throw PreconditionError("path " + std::to_string(i) + " has fewer than two vertices");
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      Arc a{p[j], p[j + 1]};
      if (!d.digraph.has_arc(a.tail, a.head))
        throw PreconditionError("path " + std::to_string(i) + " uses non-arc " + std::to_string(a.tail) + "->" +
                                std::to_string(a.head));
      auto [it, fresh] = owner.emplace(a, i);
      if (!fresh)
        throw PreconditionError("paths " + std::to_string(it->second) + " and " + std::to_string(i) +
                                " intersect: both use arc " + std::to_string(a.tail) + "->" + std::to_string(a.head));
    }
  }
  // Interior passages: vertex -> (path, in-neighbour, out-neighbour).
  struct Passage {
    std::size_t path;
    Vertex in, out;
  };
  std::map<Vertex, std::vector<Passage>> through;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 1; j + 1 < paths[i].size(); ++j)
      through[paths[i][j]].push_back({i, paths[i][j - 1], paths[i][j + 1]});
  for (const auto& [v, list] : through) {
    const auto& rot = d.embedding.rotation(v);
    auto pos = [&](Vertex w) { return std::find(rot.begin(), rot.end(), w) - rot.begin(); };
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        auto i1 = pos(list[a].in), i2 = pos(list[a].out);
        if (i1 > i2) std::swap(i1, i2);
        auto between = [&](Vertex w) {
          auto k = pos(w);
          return i1 < k && k < i2;
        };
        if (between(list[b].in) != between(list[b].out))
          throw PreconditionError("paths " + std::to_string(list[a].path) + " and " + std::to_string(list[b].path) +
                                  " intersect: they cross at vertex " + std::to_string(v));
      }
  }
}

/// Bar 0-visibility layout in which every path of the family is realised
/// along a single vertical line.
struct AlignedLayout {
  BarLayout layout;
  std::vector<Rational> path_x;  // common x per path
  bool constrained = false;      // true when the path-aware numbering was needed
};

namespace detail {

inline bool path_line_clear(const BarLayout& layout, const std::vector<Vertex>& path, const Rational& x) {
  for (std::size_t j = 0; j + 1 < path.size(); ++j) {
    auto crossed = bars_crossed_at(layout, path[j], path[j + 1], x);
    if (!crossed || !crossed->empty()) return false;
  }
  return true;
}

/// Numbers faces and paths jointly: every arc not on a given path becomes a
/// singleton path, each path sits between the faces to the left and right
/// of its arcs, and a longest-path layering of that DAG yields one
/// x-coordinate per path and the bar extents per vertex.
inline AlignedLayout constrained_layout(const StDigraph& d, const PathFamily& paths) {
  const auto [dual, num] = dual_with_numberings(d);
  PathFamily all = paths;
  std::map<Arc, bool> covered;
  for (const auto& p : paths)
    for (std::size_t j = 0; j + 1 < p.size(); ++j) covered[Arc{p[j], p[j + 1]}] = true;
  for (const Arc& a : d.digraph.arcs())
    if (!covered.count(a)) all.push_back({a.tail, a.head});

  const int f = dual.num_faces;
  DiGraph aux(f + static_cast<int>(all.size()));
  try {
    for (std::size_t i = 0; i < all.size(); ++i) {
      const int node = f + static_cast<int>(i);
      for (std::size_t j = 0; j + 1 < all[i].size(); ++j) {
        const Arc a{all[i][j], all[i][j + 1]};
        aux.add_arc(dual.left_face.at(a), node);
        aux.add_arc(node, dual.right_face.at(a));
      }
    }
  } catch (const InvariantError&) {
    throw PreconditionError("path family cannot be aligned: a face lies on both sides of one path");
  }
  if (!aux.is_acyclic()) throw PreconditionError("path family cannot be aligned: face/path order is cyclic");
  const auto x = aux.longest_path_layers();

  AlignedLayout out;
  out.constrained = true;
  std::vector<Bar> bars;
  for (Vertex v = 0; v < d.embedding.num_vertices(); ++v)
    bars.push_back(Bar{v, Rational(num.psi[v]), Rational(2 * x[dual.left_of_vertex[v]] + 1),
                       Rational(2 * x[dual.right_of_vertex[v]] - 1)});
  out.layout = BarLayout(std::move(bars));
  for (std::size_t i = 0; i < paths.size(); ++i) out.path_x.push_back(Rational(2 * x[f + static_cast<int>(i)]));
  return out;
}

}  // namespace detail

/// Tries the plain strip layout first (a path aligns when its arcs' strips
/// share an open interval); otherwise falls back to the joint face/path
/// numbering. The result is checked before being returned.
inline AlignedLayout aligned_bar_layout(const StDigraph& d, const PathFamily& paths) {
  validate_path_family(d, paths);
  AlignedLayout out;
  const StripLayout tt = tt_bar_layout(d);
  bool all_fit = true;
  for (const auto& p : paths) {
    Rational lo = tt.strips.at(Arc{p[0], p[1]}).first;
    Rational hi = tt.strips.at(Arc{p[0], p[1]}).second;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      const auto& s = tt.strips.at(Arc{p[j], p[j + 1]});
      lo = std::max(lo, s.first);
      hi = std::min(hi, s.second);
    }
    if (!(lo < hi)) {
      all_fit = false;
      break;
    }
    out.path_x.push_back(lo + Rational(1, 2));
  }
  if (all_fit) {
    out.layout = tt.layout;
  } else {
    out = detail::constrained_layout(d, paths);
  }

  if (!realizes_weakly(out.layout, d.digraph.underlying(), 0).realized)
    throw InternalError("aligned layout does not realise the st-digraph");
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (!detail::path_line_clear(out.layout, paths[i], out.path_x[i]))
      throw InternalError("path " + std::to_string(i) + " is not visible along its common line");
  return out;
}

}  // namespace barvis

#endif  // BARVIS_ST_PLANAR_HPP
