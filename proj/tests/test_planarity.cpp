#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "barvis/planarity.hpp"

using namespace barvis;

namespace {

// Independent planarity oracle: a connected graph is planar iff some
// rotation system traces n - m + 2 faces. Enumerates every rotation system.
bool planar_by_rotation_search(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  const long target = 2 - n + static_cast<long>(g.num_edges());

  auto count_faces = [&]() {
    std::set<std::pair<Vertex, Vertex>> seen;
    long faces = 0;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : rot[v]) {
        if (seen.count({v, w})) continue;
        ++faces;
        Vertex a = v, b = w;
        while (!seen.count({a, b})) {
          seen.insert({a, b});
          const auto& rb = rot[b];
          auto it = std::find(rb.begin(), rb.end(), a);
          Vertex c = rb[(static_cast<std::size_t>(it - rb.begin()) + 1) % rb.size()];
          a = b;
          b = c;
        }
      }
    return faces;
  };

  std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
    if (v == n) return count_faces() == target;
    if (rot[v].size() <= 2) return rec(v + 1);
    // Fix the first neighbour, permute the rest.
    std::sort(rot[v].begin() + 1, rot[v].end());
    do {
      if (rec(v + 1)) return true;
    } while (std::next_permutation(rot[v].begin() + 1, rot[v].end()));
    return false;
  };
  return rec(0);
}

bool naive_biconnected(const Graph& g) {
  if (!is_connected(g)) return false;
  for (Vertex cut = 0; cut < g.num_vertices(); ++cut) {
    Graph h(g.num_vertices());
    for (const Edge& e : g.edges())
      if (e.u != cut && e.v != cut) h.add_edge(e.u, e.v);
    int comps = 0;
    connected_components(h, &comps);
    if (comps > 2) return false;  // the isolated `cut` itself is one component
  }
  return true;
}

}  // namespace

TEST(CheckPlanarity, K4HasFourFaces) {
  auto r = check_planarity(complete_graph(4));
  ASSERT_TRUE(r.planar);
  ASSERT_TRUE(r.embedding);
  EXPECT_EQ(r.embedding->faces().walks.size(), 4u);
  EXPECT_TRUE(r.embedding->satisfies_euler());
}

TEST(CheckPlanarity, K5YieldsKuratowskiWitness) {
  const Graph k5 = complete_graph(5);
  auto r = check_planarity(k5);
  EXPECT_FALSE(r.planar);
  ASSERT_FALSE(r.kuratowski.empty());
  Graph witness(5);
  for (const Edge& e : r.kuratowski) {
    EXPECT_TRUE(k5.has_edge(e.u, e.v));
    witness.add_edge(e.u, e.v);
  }
  EXPECT_FALSE(is_planar(witness));
}

TEST(CheckPlanarity, K33MinusEdgeAgreesWithRotationOracle) {
  Graph g = complete_bipartite(3, 3);
  g.remove_edge(0, 3);
  ASSERT_TRUE(planar_by_rotation_search(g));
  auto r = check_planarity(g);
  ASSERT_TRUE(r.planar);
  EXPECT_TRUE(r.embedding->satisfies_euler());

  const Graph k33 = complete_bipartite(3, 3);
  EXPECT_FALSE(planar_by_rotation_search(k33));
  EXPECT_FALSE(check_planarity(k33).planar);
}

TEST(BiconnectAugment, AlreadyBiconnectedIsUnchanged) {
  auto emb = *check_planarity(complete_graph(4)).embedding;
  auto r = biconnect_planar_augment(emb);
  EXPECT_TRUE(r.added.empty());
  EXPECT_EQ(r.embedding, emb);
}

TEST(BiconnectAugment, PathGetsOneChord) {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto r = biconnect_planar_augment(*check_planarity(path).embedding);
  EXPECT_EQ(r.added, (std::vector<Edge>{{0, 2}}));
  EXPECT_TRUE(r.embedding.satisfies_euler());
  EXPECT_TRUE(naive_biconnected(r.embedding.graph()));
}

TEST(BiconnectAugment, StarGetsTwoChords) {
  Graph star(4);
  for (Vertex v = 1; v < 4; ++v) star.add_edge(0, v);
  auto r = biconnect_planar_augment(*check_planarity(star).embedding);
  EXPECT_EQ(r.added.size(), 2u);
  EXPECT_TRUE(naive_biconnected(r.embedding.graph()));
  EXPECT_TRUE(r.embedding.satisfies_euler());
  EXPECT_TRUE(is_planar(r.embedding.graph()));
}

TEST(BiconnectAugment, RandomTreesStayPlanar) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, static_cast<Vertex>(rng() % v));
    auto r = biconnect_planar_augment(*check_planarity(g).embedding);
    const Graph out = r.embedding.graph();
    for (const Edge& e : g.edges()) EXPECT_TRUE(out.has_edge(e.u, e.v));
    EXPECT_TRUE(r.embedding.satisfies_euler());
    EXPECT_TRUE(check_planarity(out).planar);
    if (n >= 3) {
      EXPECT_TRUE(naive_biconnected(out));
    }
  }
}

TEST(BiconnectAugment, RejectsDisconnectedInput) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_THROW(biconnect_planar_augment(*check_planarity(g).embedding), PreconditionError);
}
