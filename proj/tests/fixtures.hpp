// Test-only instance builders shared by the unit tests and the acceptance
// binary.
#ifndef BARVIS_TESTS_FIXTURES_HPP
#define BARVIS_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "barvis/one_planar.hpp"
#include "barvis/planarity.hpp"

namespace fixture {

using namespace barvis;

/// Maximal planar graph on n vertices: shuffled pairs, kept while planar.
inline PlanarEmbedding maximal_planar(std::mt19937& rng, int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(n);
  for (auto [u, v] : pairs) {
    g.add_edge(u, v);
    if (!is_planar(g)) g.remove_edge(u, v);
  }
  return *check_planarity(g).embedding;
}

/// K5 as K5 - {3,4} plus the edge 3-4 crossing 0-1.
inline OnePlanarEmbedding k5_one_crossing() {
  Graph g = complete_graph(5);
  g.remove_edge(3, 4);
  OnePlanarEmbedding e = crossing_free(*check_planarity(g).embedding);
  cross_edge(e, 0, 1);
  return e;
}

/// K6 as the octahedron (poles 0 and 5, equator 1-2-3-4) plus the three
/// antipodal edges, each crossing one octahedron edge.
inline OnePlanarEmbedding k6_three_crossings() {
  Graph g(6);
  for (Vertex v = 1; v <= 4; ++v) {
    g.add_edge(0, v);
    g.add_edge(5, v);
    g.add_edge(v, v % 4 + 1);
  }
  OnePlanarEmbedding e = crossing_free(*check_planarity(g).embedding);
  cross_edge(e, 1, 2);  // 0-5
  cross_edge(e, 5, 4);  // 1-3
  cross_edge(e, 0, 3);  // 2-4
  return e;
}

/// Random 1-planar drawing: a maximal planar graph with some edges crossed
/// by the diagonal of their two faces, then some uncrossed edges dropped.
inline OnePlanarEmbedding random_one_planar(std::mt19937& rng, int n, double cross_p = 0.5, double drop_p = 0.1) {
  OnePlanarEmbedding e = crossing_free(maximal_planar(rng, n));
  std::bernoulli_distribution cross(cross_p), drop(drop_p);
  std::vector<Edge> edges = e.planarization.graph().edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const Edge& ed : edges) {
    if (!cross(rng) || !e.planarization.has_edge(ed.u, ed.v)) continue;
    try {
      cross_edge(e, ed.u, ed.v);
    } catch (const PreconditionError&) {
    }
  }
  for (const Edge& ed : e.planarization.graph().edges())
    if (e.is_original(ed.u) && e.is_original(ed.v) && drop(rng)) e.planarization.remove_edge(ed.u, ed.v);
  return e;
}

}  // namespace fixture

#endif  // BARVIS_TESTS_FIXTURES_HPP
