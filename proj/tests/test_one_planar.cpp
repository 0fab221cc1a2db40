#include <random>

#include <gtest/gtest.h>

#include "barvis/one_planar.hpp"
#include "fixtures.hpp"

using namespace barvis;

namespace {

// Square kite a,b,c,d around crossing X of ac and bd; the kite edge ab is
// itself crossed at Y by e-f, with f sitting inside the kite.
OnePlanarEmbedding crossed_kite_edge() {
  OnePlanarEmbedding e;
  e.num_original = 6;
  e.planarization = PlanarEmbedding({{3, 6, 7}, {7, 6, 2}, {1, 6, 3}, {2, 6, 0}, {7}, {7}, {2, 1, 0, 3}, {5, 1, 4, 0}},
                                    Dart{0, 3});
  e.crossings = {Crossing{6, Edge(0, 2), Edge(1, 3)}, Crossing{7, Edge(0, 1), Edge(4, 5)}};
  return e;
}

bool all_kites_hug(const OnePlanarEmbedding& e) {
  for (const Crossing& c : e.crossings) {
    const auto& r = e.planarization.rotation(c.x);
    for (int i = 0; i < 4; ++i)
      if (!detail::kite_hugs(e.planarization, c.x, r[i], r[(i + 1) % 4])) return false;
  }
  return true;
}

}  // namespace

TEST(OnePlanarEmbedding, FixturesAreValid) {
  const auto k5 = fixture::k5_one_crossing();
  EXPECT_NO_THROW(k5.validate());
  EXPECT_EQ(k5.original_graph(), complete_graph(5));
  ASSERT_EQ(k5.crossings.size(), 1u);
  EXPECT_EQ(k5.crossings[0].second, Edge(3, 4));

  const auto k6 = fixture::k6_three_crossings();
  EXPECT_NO_THROW(k6.validate());
  EXPECT_EQ(k6.original_graph(), complete_graph(6));
  EXPECT_EQ(k6.crossings.size(), 3u);
  EXPECT_NO_THROW(crossed_kite_edge().validate());
}

TEST(OnePlanarEmbedding, RejectsBrokenCrossings) {
  auto e = fixture::k5_one_crossing();
  std::swap(e.crossings[0].first, e.crossings[0].second);
  EXPECT_NO_THROW(e.validate());
  e.crossings[0].second = Edge(2, 3);
  EXPECT_THROW(e.validate(), InvariantError);

  auto twice = crossed_kite_edge();
  twice.crossings[1].first = Edge(0, 2);
  EXPECT_THROW(twice.validate(), InvariantError);
}

TEST(KiteAugment, CrossingFreeUnchanged) {
  std::mt19937 rng(1);
  const auto e = fixture::random_one_planar(rng, 8, 0.0, 0.3);
  const auto r = kite_augment(e);
  EXPECT_TRUE(r.changes.empty());
  EXPECT_EQ(r.embedding.planarization, e.planarization);
}

TEST(KiteAugment, K5KiteAlreadyPresent) {
  const auto e = fixture::k5_one_crossing();
  const auto r = kite_augment(e);
  EXPECT_TRUE(r.changes.empty());
  EXPECT_EQ(r.embedding.planarization, e.planarization);
}

TEST(KiteAugment, MissingKiteEdgeInsertedInQuadrant) {
  auto e = fixture::k5_one_crossing();
  const Vertex x = e.crossings[0].x;
  const Vertex p = e.planarization.rotation(x)[0], q = e.planarization.rotation(x)[1];
  e.planarization.remove_edge(p, q);
  const auto r = kite_augment(e);
  ASSERT_EQ(r.changes.size(), 1u);
  EXPECT_EQ(r.changes[0].kind, KiteChange::Kind::inserted);
  EXPECT_EQ(r.changes[0].edge, Edge(p, q));
  EXPECT_TRUE(r.embedding.planarization.satisfies_euler());
  EXPECT_TRUE(all_kites_hug(r.embedding));
}

TEST(KiteAugment, CrossedKiteEdgeRerouted) {
  const auto r = kite_augment(crossed_kite_edge());
  ASSERT_EQ(r.changes.size(), 1u);
  EXPECT_EQ(r.changes[0].kind, KiteChange::Kind::rerouted);
  EXPECT_EQ(r.changes[0].edge, Edge(0, 1));
  EXPECT_EQ(r.changes[0].freed, Edge(4, 5));
  EXPECT_EQ(r.embedding.crossings.size(), 1u);
  EXPECT_TRUE(r.embedding.planarization.has_edge(4, 5));
  EXPECT_TRUE(r.embedding.planarization.satisfies_euler());
  EXPECT_TRUE(all_kites_hug(r.embedding));
  EXPECT_EQ(r.embedding.original_graph(), crossed_kite_edge().original_graph());
}

TEST(KiteAugment, RandomDrawingsReachFixpoint) {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    const auto e = fixture::random_one_planar(rng, 5 + static_cast<int>(rng() % 10), 0.5, 0.3);
    const auto r = kite_augment(e);
    EXPECT_LE(r.embedding.crossings.size(), e.crossings.size());
    EXPECT_TRUE(all_kites_hug(r.embedding));
    EXPECT_TRUE(r.embedding.planarization.satisfies_euler());
    const Graph before = e.original_graph(), after = r.embedding.original_graph();
    for (const Edge& ed : before.edges()) EXPECT_TRUE(after.has_edge(ed.u, ed.v));
  }
}

TEST(ReplaceCrossings, NoCrossingsIsPlainOrientation) {
  std::mt19937 rng(2);
  const auto e = fixture::random_one_planar(rng, 7, 0.0, 0.0);
  const auto r = replace_crossings(e);
  EXPECT_TRUE(r.registry.empty());
  EXPECT_TRUE(r.augmentation.empty());
  EXPECT_EQ(r.digraph.embedding.num_vertices(), 7);
}

TEST(ReplaceCrossings, K5HasOneRegistryEntry) {
  const auto r = replace_crossings(fixture::k5_one_crossing());
  ASSERT_EQ(r.registry.size(), 1u);
  EXPECT_NO_THROW(validate_st_digraph(r.digraph));
  const DummyPath& dp = r.registry[0];
  EXPECT_EQ(r.digraph.embedding.degree(dp.u), 2);
  EXPECT_EQ(r.digraph.embedding.degree(dp.v), 2);
  const auto path = dp.path();
  for (std::size_t j = 0; j + 1 < path.size(); ++j) EXPECT_TRUE(r.digraph.digraph.has_arc(path[j], path[j + 1]));
  EXPECT_TRUE(r.digraph.digraph.has_arc(dp.partner.u, dp.partner.v) ||
              r.digraph.digraph.has_arc(dp.partner.v, dp.partner.u));
  const Edge crossed(dp.a, dp.b);
  const Crossing c = fixture::k5_one_crossing().crossings[0];
  EXPECT_TRUE(crossed == c.first || crossed == c.second);
}

TEST(ReplaceCrossings, RequiresKites) {
  auto e = fixture::k5_one_crossing();
  const Vertex x = e.crossings[0].x;
  e.planarization.remove_edge(e.planarization.rotation(x)[0], e.planarization.rotation(x)[1]);
  EXPECT_THROW(replace_crossings(e), PreconditionError);
}

TEST(OnePlanarToWeB1, PlanarGraphNeedsNoSlack) {
  std::mt19937 rng(4);
  const auto e = fixture::random_one_planar(rng, 9, 0.0, 0.2);
  const Graph g = e.original_graph();
  const auto r = oneplanar_to_web1(e, g);
  EXPECT_EQ(r.layout.size(), 9u);
  EXPECT_TRUE(realizes_weakly(r.layout, g, 0).realized);
}

TEST(OnePlanarToWeB1, K5AndK6) {
  const auto k5 = oneplanar_to_web1(fixture::k5_one_crossing(), complete_graph(5));
  EXPECT_EQ(k5.layout.size(), 5u);
  EXPECT_TRUE(realizes_weakly(k5.layout, complete_graph(5), 1).realized);
  const auto k6 = oneplanar_to_web1(fixture::k6_three_crossings(), complete_graph(6));
  EXPECT_EQ(k6.layout.size(), 6u);
  EXPECT_TRUE(realizes_weakly(k6.layout, complete_graph(6), 1).realized);
  EXPECT_EQ(k6.replacement.registry.size(), 3u);
}

TEST(OnePlanarToWeB1, CrossedKiteEdgeInstance) {
  const auto e = crossed_kite_edge();
  const auto r = oneplanar_to_web1(e, e.original_graph());
  EXPECT_TRUE(realizes_weakly(r.layout, e.original_graph(), 1).realized);
}

TEST(OnePlanarToWeB1, RandomDrawings) {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 80; ++iter) {
    const auto e = fixture::random_one_planar(rng, 3 + static_cast<int>(rng() % 14), 0.6, 0.15);
    const Graph g = e.original_graph();
    const auto r = oneplanar_to_web1(e, g);
    EXPECT_EQ(r.layout.size(), static_cast<std::size_t>(g.num_vertices()));
    EXPECT_TRUE(realizes_weakly(r.layout, g, 1).realized);
  }
}

TEST(OnePlanarToWeB1, RejectsMismatchedGraph) {
  EXPECT_THROW(oneplanar_to_web1(fixture::k5_one_crossing(), complete_graph(4)), PreconditionError);
  Graph g = complete_graph(5);
  g.remove_edge(0, 1);
  EXPECT_THROW(oneplanar_to_web1(fixture::k5_one_crossing(), g), PreconditionError);
}
