#include <random>
#include <set>

#include <gtest/gtest.h>

#include "barvis/planarity.hpp"
#include "barvis/st_planar.hpp"

using namespace barvis;

namespace {

// s=0, a=1, b=2, t=3: a on the left, b on the right, and the edge st drawn
// around the right of b.
StDigraph diamond() {
  PlanarEmbedding e({{1, 2, 3}, {3, 0}, {0, 3}, {0, 2, 1}}, Dart{0, 1});
  return st_orient(e, 0, 3);
}

// Two stacked diamonds sharing the middle vertex c=3, plus st around the right.
StDigraph double_diamond() {
  PlanarEmbedding e({{1, 2, 6}, {3, 0}, {0, 3}, {4, 5, 2, 1}, {6, 3}, {6, 3}, {0, 5, 4}}, Dart{0, 1});
  return st_orient(e, 0, 6);
}

// Random biconnected plane graph: a Hamiltonian cycle plus planar chords.
StDigraph random_st(std::mt19937& rng, int n) {
  Graph g = cycle_graph(n);
  for (int tries = 0; tries < 3 * n; ++tries) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    if (!is_planar(g)) g.remove_edge(u, v);
  }
  PlanarEmbedding e = *check_planarity(g).embedding;
  const Dart d = *e.outer_dart();
  return st_orient(e, d.from, d.to);
}

bool reaches(const DiGraph& g, Vertex a, Vertex b) {
  return g.reachable_from(a)[static_cast<std::size_t>(b)];
}

}  // namespace

TEST(StOrient, SingleEdge) {
  PlanarEmbedding e({{1}, {0}}, Dart{0, 1});
  StDigraph d = st_orient(e, 0, 1);
  EXPECT_TRUE(d.digraph.has_arc(0, 1));
  EXPECT_NO_THROW(validate_st_digraph(d));
  const auto tt = tt_bar_layout(d);
  EXPECT_TRUE(realizes_weakly(tt.layout, d.digraph.underlying(), 0).realized);
}

TEST(StOrient, DiamondOrientation) {
  const StDigraph d = diamond();
  EXPECT_NO_THROW(validate_st_digraph(d));
  EXPECT_TRUE(d.digraph.has_arc(0, 1));
  EXPECT_TRUE(d.digraph.has_arc(0, 2));
  EXPECT_TRUE(d.digraph.has_arc(1, 3));
  EXPECT_TRUE(d.digraph.has_arc(2, 3));
  EXPECT_TRUE(d.digraph.has_arc(0, 3));
}

TEST(StOrient, RejectsBadEndpoints) {
  PlanarEmbedding e({{1, 2, 3}, {3, 0}, {0, 3}, {0, 2, 1}}, Dart{0, 1});
  EXPECT_THROW(st_orient(e, 1, 2), PreconditionError);
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_THROW(st_orient(*check_planarity(path).embedding, 0, 1), PreconditionError);
}

TEST(DualNumbering, DiamondValues) {
  const StDigraph d = diamond();
  const auto [dual, num] = dual_with_numberings(d);
  EXPECT_EQ(dual.num_faces, 4);
  EXPECT_EQ(num.psi, (std::vector<int>{0, 1, 1, 2}));
  auto chi = [&](int f) { return num.chi[f]; };
  EXPECT_EQ(chi(dual.left_outer), 0);
  EXPECT_EQ(chi(dual.right_outer), 3);
  EXPECT_EQ(chi(dual.left_of_vertex[1]), 0);
  EXPECT_EQ(chi(dual.right_of_vertex[1]), 1);
  EXPECT_EQ(chi(dual.left_of_vertex[2]), 1);
  EXPECT_EQ(chi(dual.right_of_vertex[2]), 2);
}

TEST(TtLayout, DiamondBars) {
  const auto tt = tt_bar_layout(diamond());
  auto expect_bar = [&](Vertex v, long y, long l, long r) {
    EXPECT_EQ(tt.layout.bar(v), (Bar{v, Rational(y), Rational(l), Rational(r)})) << "bar " << v;
  };
  expect_bar(0, 0, 0, 5);
  expect_bar(1, 1, 0, 1);
  expect_bar(2, 1, 2, 3);
  expect_bar(3, 2, 0, 5);
  EXPECT_EQ(tt.strips.at(Arc{0, 3}), std::make_pair(Rational(4), Rational(5)));
}

TEST(TtLayout, RandomInstances) {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const StDigraph d = random_st(rng, n);
    ASSERT_NO_THROW(validate_st_digraph(d));
    const auto [dual, num] = dual_with_numberings(d);
    const auto tt = tt_bar_layout(d);
    EXPECT_TRUE(realizes_weakly(tt.layout, d.digraph.underlying(), 0).realized);

    for (const Arc& a : d.digraph.arcs()) {
      const auto& [lo, hi] = tt.strips.at(a);
      EXPECT_LT(lo, hi);
      const Bar& bt = tt.layout.bar(a.tail);
      const Bar& bh = tt.layout.bar(a.head);
      EXPECT_LE(std::max(bt.x_left, bh.x_left), lo);
      EXPECT_GE(std::min(bt.x_right, bh.x_right), hi);
      auto crossed = bars_crossed_at(tt.layout, a.tail, a.head, lo + Rational(1, 2));
      ASSERT_TRUE(crossed);
      EXPECT_TRUE(crossed->empty());
    }

    // Every pair is ordered vertically by a path or horizontally by the dual.
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        int relations = 0;
        relations += reaches(d.digraph, u, v);
        relations += reaches(d.digraph, v, u);
        const int ru = dual.right_of_vertex[u], lv = dual.left_of_vertex[v];
        const int rv = dual.right_of_vertex[v], lu = dual.left_of_vertex[u];
        relations += ru == lv || reaches(dual.digraph, ru, lv);
        relations += rv == lu || reaches(dual.digraph, rv, lu);
        EXPECT_EQ(relations, 1) << "pair " << u << "," << v;
      }
  }
}

TEST(AlignedLayout, DiamondSides) {
  const StDigraph d = diamond();
  const auto al = aligned_bar_layout(d, {{0, 1, 3}, {0, 2, 3}});
  EXPECT_FALSE(al.constrained);
  EXPECT_EQ(al.path_x, (std::vector<Rational>{Rational(1, 2), Rational(5, 2)}));
}

TEST(AlignedLayout, CrossingPathsRejected) {
  const StDigraph d = double_diamond();
  EXPECT_NO_THROW(aligned_bar_layout(d, {{0, 1, 3, 4}, {0, 2, 3, 5}}));
  try {
    aligned_bar_layout(d, {{0, 1, 3, 5}, {0, 2, 3, 4}});
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("cross at vertex 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(aligned_bar_layout(d, {{0, 1, 3}, {1, 3, 4}}), PreconditionError);
  EXPECT_THROW(aligned_bar_layout(d, {{0, 3}}), PreconditionError);
}

TEST(AlignedLayout, RandomNonCrossingFamilies) {
  std::mt19937 rng(29);
  int constrained = 0, attempted = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const StDigraph d = random_st(rng, n);
    PathFamily paths;
    std::set<Arc> used;
    for (int p = 0; p < 3; ++p) {
      Vertex v = static_cast<Vertex>(rng() % n);
      std::vector<Vertex> path{v};
      while (path.size() < 4) {
        std::vector<Vertex> outs;
        for (Vertex w : d.digraph.out_neighbors(v))
          if (!used.count(Arc{v, w})) outs.push_back(w);
        if (outs.empty()) break;
        const Vertex w = outs[rng() % outs.size()];
        used.insert(Arc{v, w});
        path.push_back(w);
        v = w;
      }
      if (path.size() >= 2) paths.push_back(path);
    }
    try {
      validate_path_family(d, paths);
    } catch (const PreconditionError&) {
      continue;
    }
    ++attempted;
    const auto al = aligned_bar_layout(d, paths);
    constrained += al.constrained;
    EXPECT_EQ(al.path_x.size(), paths.size());
  }
  EXPECT_GT(attempted, 100);
  RecordProperty("constrained", constrained);
}
