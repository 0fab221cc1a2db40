#ifndef BARVIS_GRAPH_HPP
#define BARVIS_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "barvis/errors.hpp"

namespace barvis {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered vertex pair.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {

inline bool sorted_insert(std::vector<Vertex>& list, Vertex x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it != list.end() && *it == x) return false;
  list.insert(it, x);
  return true;
}

inline bool sorted_contains(const std::vector<Vertex>& list, Vertex x) {
  return std::binary_search(list.begin(), list.end(), x);
}

inline bool sorted_erase(std::vector<Vertex>& list, Vertex x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) return false;
  list.erase(it);
  return true;
}

}  // namespace detail

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InvariantError("negative vertex count");
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return edge_count_; }

  int add_vertex() {
    adj_.emplace_back();
    return num_vertices() - 1;
  }

  /// Returns false when the edge was already present.
  bool add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw InvariantError("self-loop at vertex " + std::to_string(a));
    if (!detail::sorted_insert(adj_[a], b)) return false;
    detail::sorted_insert(adj_[b], a);
    ++edge_count_;
    return true;
  }

  bool remove_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (!detail::sorted_erase(adj_[a], b)) return false;
    detail::sorted_erase(adj_[b], a);
    --edge_count_;
    return true;
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices()) return false;
    return detail::sorted_contains(adj_[a], b);
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex w : adj_[u])
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= num_vertices())
      throw InvariantError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(num_vertices()) + ")");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Simple digraph on vertices 0..n-1. Antiparallel arcs are rejected so the
/// underlying graph is simple as well.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int n) : out_(static_cast<std::size_t>(n)), in_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InvariantError("negative vertex count");
  }
  DiGraph(int n, std::span<const Arc> arcs) : DiGraph(n) {
    for (const Arc& a : arcs) add_arc(a.tail, a.head);
  }

  int num_vertices() const { return static_cast<int>(out_.size()); }
  std::size_t num_arcs() const { return arc_count_; }

  int add_vertex() {
    out_.emplace_back();
    in_.emplace_back();
    return num_vertices() - 1;
  }

  bool add_arc(Vertex tail, Vertex head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head) throw InvariantError("self-loop at vertex " + std::to_string(tail));
    if (has_arc(head, tail))
      throw InvariantError("antiparallel arc " + std::to_string(tail) + "->" + std::to_string(head));
    if (!detail::sorted_insert(out_[tail], head)) return false;
    detail::sorted_insert(in_[head], tail);
    ++arc_count_;
    return true;
  }

  bool remove_arc(Vertex tail, Vertex head) {
    if (!has_arc(tail, head)) return false;
    detail::sorted_erase(out_[tail], head);
    detail::sorted_erase(in_[head], tail);
    --arc_count_;
    return true;
  }

  bool has_arc(Vertex tail, Vertex head) const {
    if (tail < 0 || head < 0 || tail >= num_vertices() || head >= num_vertices()) return false;
    return detail::sorted_contains(out_[tail], head);
  }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
  int outdeg(Vertex v) const { return static_cast<int>(out_.at(v).size()); }
  int indeg(Vertex v) const { return static_cast<int>(in_.at(v).size()); }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex w : out_[u]) out.push_back({u, w});
    return out;
  }

  Graph underlying() const {
    Graph g(num_vertices());
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex w : out_[u]) g.add_edge(u, w);
    return g;
  }

  /// Kahn order; empty optional when a cycle exists.
  std::optional<std::vector<Vertex>> topological_order() const {
    std::vector<int> remaining(out_.size());
    std::queue<Vertex> ready;
    for (Vertex v = 0; v < num_vertices(); ++v) {
      remaining[v] = indeg(v);
      if (remaining[v] == 0) ready.push(v);
    }
    std::vector<Vertex> order;
    order.reserve(out_.size());
    while (!ready.empty()) {
      Vertex v = ready.front();
      ready.pop();
      order.push_back(v);
      for (Vertex w : out_[v])
        if (--remaining[w] == 0) ready.push(w);
    }
    if (order.size() != out_.size()) return std::nullopt;
    return order;
  }

  bool is_acyclic() const { return topological_order().has_value(); }

  std::vector<Vertex> sources() const {
    std::vector<Vertex> r;
    for (Vertex v = 0; v < num_vertices(); ++v)
      if (indeg(v) == 0) r.push_back(v);
    return r;
  }

  std::vector<Vertex> sinks() const {
    std::vector<Vertex> r;
    for (Vertex v = 0; v < num_vertices(); ++v)
      if (outdeg(v) == 0) r.push_back(v);
    return r;
  }

  /// Vertices reachable from `from` (including itself).
  std::vector<bool> reachable_from(Vertex from) const {
    std::vector<bool> seen(out_.size(), false);
    std::vector<Vertex> stack{from};
    seen.at(from) = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : out_[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return seen;
  }

  /// Longest-path layering from the vertices of in-degree zero; the
  /// resulting numbering has minimum range among topological numberings.
  std::vector<int> longest_path_layers() const {
    auto order = topological_order();
    if (!order) throw PreconditionError("longest-path layering needs an acyclic digraph");
    std::vector<int> layer(out_.size(), 0);
    for (Vertex v : *order)
      for (Vertex w : out_[v]) layer[w] = std::max(layer[w], layer[v] + 1);
    return layer;
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.out_ == b.out_; }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= num_vertices())
      throw InvariantError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(num_vertices()) + ")");
  }

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// Undirected square: {u,w} is an edge iff a directed path of length one or
/// two joins them (in either direction).
inline Graph square_of_digraph(const DiGraph& g) {
  Graph sq(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      sq.add_edge(u, v);
      for (Vertex w : g.out_neighbors(v))
        if (w != u) sq.add_edge(u, w);
    }
  }
  return sq;
}

/// Connected component index per vertex.
inline std::vector<int> connected_components(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  int c = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

inline bool is_connected(const Graph& g) {
  int c = 0;
  connected_components(g, &c);
  return c <= 1;
}

/// Block (biconnected component) labels for every edge plus the cut
/// vertices. Iterative Hopcroft-Tarjan.
struct BlockDecomposition {
  std::vector<std::pair<Edge, int>> edge_block;  // sorted by edge
  std::vector<Vertex> cut_vertices;
  int num_blocks = 0;

  int block_of(Edge e) const {
    auto it = std::lower_bound(edge_block.begin(), edge_block.end(), std::make_pair(e, -1));
    if (it == edge_block.end() || it->first != e) return -1;
    return it->second;
  }
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> edge_stack;
  int time = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> stack{{root, 0}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      Vertex v = f.v;
      auto nb = g.neighbors(v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] == -1) {
          parent[w] = v;
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = time++;
          if (v == root) ++root_children;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_cut[p] = true;
        Edge cut(p, v);
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          out.edge_block.emplace_back(e, out.num_blocks);
          if (e == cut) break;
        }
        ++out.num_blocks;
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
  std::sort(out.edge_block.begin(), out.edge_block.end());
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

/// Connected, at least one edge, and no cut vertex. K2 counts as biconnected.
inline bool is_biconnected(const Graph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

enum class CycleStructure { forest, has_triangle, neither };

inline const char* to_string(CycleStructure c) {
  switch (c) {
    case CycleStructure::forest: return "forest";
    case CycleStructure::has_triangle: return "has-triangle";
    case CycleStructure::neither: return "neither";
  }
  return "?";
}

/// Strong bar 1-visibility graphs are always forests or contain a triangle;
/// this classifies an arbitrary graph into the three cases.
inline CycleStructure forest_or_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < u) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) return CycleStructure::has_triangle;
    }
  }
  int components = 0;
  connected_components(g, &components);
  // A forest has exactly n - c edges.
  if (static_cast<int>(g.num_edges()) == g.num_vertices() - components) return CycleStructure::forest;
  return CycleStructure::neither;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// The 6-cycle 0..5 with the inscribed triangle {0,2,4}.
inline Graph s3_graph() {
  Graph g = cycle_graph(6);
  g.add_edge(0, 2);
  g.add_edge(2, 4);
  g.add_edge(4, 0);
  return g;
}

}  // namespace barvis

#endif  // BARVIS_GRAPH_HPP
