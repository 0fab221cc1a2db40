#ifndef BARVIS_EMBEDDING_HPP
#define BARVIS_EMBEDDING_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barvis/errors.hpp"
#include "barvis/graph.hpp"

namespace barvis {

/// Directed half-edge of an undirected edge.
struct Dart {
  Vertex from = 0;
  Vertex to = 0;

  Dart reversed() const { return {to, from}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Rotation system: per vertex, the clockwise cyclic order of its neighbours.
///
/// Faces are traced with the face on the left of every dart: the dart
/// following (u,v) is (v, w) where w is the clockwise successor of u around
/// v. The outer face is identified by one of its darts.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;
  explicit PlanarEmbedding(int n) : rotation_(static_cast<std::size_t>(n)) {}
  explicit PlanarEmbedding(std::vector<std::vector<Vertex>> rotation, std::optional<Dart> outer = std::nullopt)
      : rotation_(std::move(rotation)), outer_(outer) {
    validate_symmetry();
  }

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  std::size_t num_edges() const {
    std::size_t d = 0;
    for (const auto& r : rotation_) d += r.size();
    return d / 2;
  }

  int add_vertex() {
    rotation_.emplace_back();
    return num_vertices() - 1;
  }

  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  int degree(Vertex v) const { return static_cast<int>(rotation_.at(v).size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || a >= num_vertices()) return false;
    const auto& r = rotation_[a];
    return std::find(r.begin(), r.end(), b) != r.end();
  }

  Graph graph() const {
    Graph g(num_vertices());
    for (Vertex v = 0; v < num_vertices(); ++v)
      for (Vertex w : rotation_[v]) g.add_edge(v, w);
    return g;
  }

  /// Clockwise successor / predecessor of `nb` around `v`.
  Vertex cw_next(Vertex v, Vertex nb) const {
    const auto& r = rotation_.at(v);
    return r[(index_of(v, nb) + 1) % r.size()];
  }
  Vertex cw_prev(Vertex v, Vertex nb) const {
    const auto& r = rotation_.at(v);
    return r[(index_of(v, nb) + r.size() - 1) % r.size()];
  }

  Dart next_in_face(Dart d) const { return {d.to, cw_next(d.to, d.from)}; }
  Dart prev_in_face(Dart d) const { return {cw_prev(d.from, d.to), d.from}; }

  /// Darts of the face on the left of `start`, beginning with `start`.
  std::vector<Dart> face_walk(Dart start) const {
    std::vector<Dart> walk;
    Dart d = start;
    const std::size_t limit = 2 * num_edges() + 1;
    do {
      walk.push_back(d);
      d = next_in_face(d);
      if (walk.size() > limit) throw InvariantError("face walk does not close; rotation system is corrupt");
    } while (d != start);
    return walk;
  }

  struct Faces {
    std::vector<std::vector<Dart>> walks;
    std::map<Dart, int> face_of;  // face on the left of the dart
  };

  Faces faces() const {
    Faces f;
    for (Vertex v = 0; v < num_vertices(); ++v)
      for (Vertex w : rotation_[v]) {
        Dart d{v, w};
        if (f.face_of.count(d)) continue;
        auto walk = face_walk(d);
        int id = static_cast<int>(f.walks.size());
        for (const Dart& x : walk) f.face_of[x] = id;
        f.walks.push_back(std::move(walk));
      }
    return f;
  }

  /// Genus-zero check. Each component is traced as its own sphere, so the
  /// face count includes one outer face per component: n - m + f == 2c.
  bool satisfies_euler() const {
    const Graph g = graph();
    int comps = 0;
    connected_components(g, &comps);
    int isolated = 0;
    for (Vertex v = 0; v < num_vertices(); ++v)
      if (rotation_[v].empty()) ++isolated;
    const long n = num_vertices();
    const long m = static_cast<long>(num_edges());
    // An isolated vertex has no darts; count its single face explicitly.
    const long f = static_cast<long>(faces().walks.size()) + isolated;
    return n - m + f == 2L * comps;
  }

  std::optional<Dart> outer_dart() const { return outer_; }
  void set_outer_dart(Dart d) {
    if (!has_edge(d.from, d.to)) throw InvariantError("outer dart is not an edge of the embedding");
    outer_ = d;
  }
  std::vector<Dart> outer_face() const {
    if (!outer_) throw PreconditionError("embedding has no designated outer face");
    return face_walk(*outer_);
  }

  /// Inserts edge {a,b}: b goes clockwise right after `a_after` around a,
  /// a goes clockwise right after `b_after` around b. When a or b has no
  /// neighbours the corresponding anchor is ignored.
  void insert_edge(Vertex a, Vertex a_after, Vertex b, Vertex b_after) {
    if (a == b) throw InvariantError("self-loop insertion");
    if (has_edge(a, b)) throw InvariantError("parallel edge insertion " + std::to_string(a) + "-" + std::to_string(b));
    insert_after(a, a_after, b);
    insert_after(b, b_after, a);
  }

  void remove_edge(Vertex a, Vertex b) {
    if (!has_edge(a, b)) throw InvariantError("removing absent edge");
    if (outer_ && (*outer_ == Dart{a, b} || *outer_ == Dart{b, a})) {
      // Move the marker to another dart of the merged face.
      std::optional<Dart> replacement;
      for (Dart d : face_walk(*outer_))
        if (d != Dart{a, b} && d != Dart{b, a}) {
          replacement = d;
          break;
        }
      if (!replacement)
        for (Dart d : face_walk(outer_->reversed()))
          if (d != Dart{a, b} && d != Dart{b, a}) {
            replacement = d;
            break;
          }
      outer_ = replacement;
    }
    auto& ra = rotation_[a];
    ra.erase(std::find(ra.begin(), ra.end(), b));
    auto& rb = rotation_[b];
    rb.erase(std::find(rb.begin(), rb.end(), a));
  }

  /// Replaces neighbour `old_nb` of v by `new_nb` at the same rotation slot.
  void replace_neighbor(Vertex v, Vertex old_nb, Vertex new_nb) {
    auto& r = rotation_.at(v);
    r[index_of(v, old_nb)] = new_nb;
  }

  /// Replaces neighbour `old_nb` of v by the clockwise sequence `seq`.
  void splice_neighbor(Vertex v, Vertex old_nb, const std::vector<Vertex>& seq) {
    auto& r = rotation_.at(v);
    std::size_t i = index_of(v, old_nb);
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(i), seq.begin(), seq.end());
  }

  /// Removes the degree-2 vertex x, joining its neighbours r and s by an edge
  /// in x's rotation slots. x stays as an isolated id.
  void dissolve(Vertex x) {
    if (degree(x) != 2) throw InvariantError("dissolve needs a degree-2 vertex");
    const Vertex r = rotation_[x][0], s = rotation_[x][1];
    if (has_edge(r, s)) throw InvariantError("dissolve would create parallel edge " + std::to_string(r) + "-" + std::to_string(s));
    rotation_[r][index_of(r, x)] = s;
    rotation_[s][index_of(s, x)] = r;
    rotation_[x].clear();
    if (outer_ && (outer_->from == x || outer_->to == x)) {
      outer_ = (*outer_ == Dart{r, x} || *outer_ == Dart{x, s}) ? Dart{r, s} : Dart{s, r};
    }
  }

  /// Drops every edge incident to v (the vertex id stays, isolated).
  void isolate(Vertex v) {
    auto nbs = rotation_.at(v);
    for (Vertex w : nbs) remove_edge(v, w);
  }

  friend bool operator==(const PlanarEmbedding& a, const PlanarEmbedding& b) {
    return a.rotation_ == b.rotation_ && a.outer_ == b.outer_;
  }

 private:
  std::size_t index_of(Vertex v, Vertex nb) const {
    const auto& r = rotation_.at(v);
    auto it = std::find(r.begin(), r.end(), nb);
    if (it == r.end())
      throw InvariantError("vertex " + std::to_string(nb) + " is not a neighbour of " + std::to_string(v));
    return static_cast<std::size_t>(it - r.begin());
  }

  void insert_after(Vertex v, Vertex after, Vertex x) {
    auto& r = rotation_.at(v);
    if (r.empty()) {
      r.push_back(x);
      return;
    }
    std::size_t i = index_of(v, after);
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(i + 1), x);
  }

  void validate_symmetry() const {
    for (Vertex v = 0; v < num_vertices(); ++v) {
      const auto& r = rotation_[v];
      std::vector<Vertex> sorted = r;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvariantError("parallel edges at vertex " + std::to_string(v));
      for (Vertex w : r) {
        if (w < 0 || w >= num_vertices() || w == v)
          throw InvariantError("bad neighbour " + std::to_string(w) + " at vertex " + std::to_string(v));
        const auto& rw = rotation_[w];
        if (std::find(rw.begin(), rw.end(), v) == rw.end())
          throw InvariantError("rotation asymmetric on edge " + std::to_string(v) + "-" + std::to_string(w));
      }
    }
    if (outer_ && !has_edge(outer_->from, outer_->to)) throw InvariantError("outer dart is not an edge");
  }

  std::vector<std::vector<Vertex>> rotation_;
  std::optional<Dart> outer_;
};

/// Vertex sequence of a face walk (tail of every dart).
inline std::vector<Vertex> walk_vertices(const std::vector<Dart>& walk) {
  std::vector<Vertex> out;
  out.reserve(walk.size());
  for (const Dart& d : walk) out.push_back(d.from);
  return out;
}

}  // namespace barvis

#endif  // BARVIS_EMBEDDING_HPP
