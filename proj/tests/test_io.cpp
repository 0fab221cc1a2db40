#include <random>
#include <regex>

#include <gtest/gtest.h>

#include "barvis/barvis.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace barvis;

namespace {

template <class T>
void expect_round_trip(const T& x) {
  const auto j = io::emit(x);
  const T back = io::parse<T>(nlohmann::json::parse(j.dump()));
  EXPECT_TRUE(back == x) << j.dump();
  EXPECT_EQ(io::emit(back), j);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Json, GraphsRoundTrip) {
  expect_round_trip(Graph());
  expect_round_trip(complete_graph(5));
  expect_round_trip(s3_graph());
  DiGraph d(4);
  d.add_arc(0, 1);
  d.add_arc(2, 1);
  d.add_arc(3, 0);
  expect_round_trip(d);
}

TEST(Json, EmbeddingsRoundTrip) {
  std::mt19937 rng(5);
  PlanarEmbedding p = fixture::maximal_planar(rng, 8);
  p.set_outer_dart(p.faces().walks[0][0]);
  expect_round_trip(p);
  expect_round_trip(fixture::k5_one_crossing());
  expect_round_trip(fixture::k6_three_crossings());
  for (int i = 0; i < 10; ++i) expect_round_trip(fixture::random_one_planar(rng, 9));
}

TEST(Json, LayoutsAndDrawingsRoundTrip) {
  std::mt19937 rng(11);
  expect_round_trip(BarLayout());
  for (int i = 0; i < 20; ++i) {
    BarLayout l = oracle::random_layout(rng, 2 + i % 7, 5, 8);
    expect_round_trip(l);
    expect_round_trip(layout_to_quasiplanar(l));
  }
  BarLayout frac({Bar{0, Rational(1, 3), Rational(-5, 2), Rational(7, 4)}});
  EXPECT_EQ(io::emit(frac)["payload"]["bars"][0]["x1"], "-5/2");
  expect_round_trip(frac);
}

TEST(Json, FlowNetworksRoundTrip) {
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) expect_round_trip(random_flow_network(rng, 3 + i, 6));
  expect_round_trip(grid_2flow_counterexample(4).network);
}

TEST(Json, RejectsBadInput) {
  using nlohmann::json;
  EXPECT_THROW(io::parse<Graph>(json::parse(R"({"kind":"layout","payload":{}})")), FormatError);
  EXPECT_THROW(io::parse<Graph>(json::parse(R"({"kind":"graph","payload":{"vertices":2}})")), FormatError);
  EXPECT_THROW(io::parse<Graph>(json::parse(R"({"kind":"graph","format_version":9,"payload":{}})")), FormatError);
  EXPECT_THROW(io::parse<BarLayout>(json::parse(R"({"kind":"layout","payload":{"bars":[{"id":0,"y":"a","x1":"0","x2":"1"}]}})")),
               FormatError);
  EXPECT_THROW(io::parse<BarLayout>(json::parse(R"({"kind":"layout","payload":{"bars":[{"id":0,"y":"0","x1":"1","x2":"0"}]}})")),
               InvariantError);
  EXPECT_THROW(io::parse<DiGraph>(json::parse(R"({"kind":"graph","payload":{"vertices":2,"edges":[[0,1]],"directed":false}})")),
               FormatError);
}

TEST(Svg, EmptyLayout) {
  const std::string s = render_svg(BarLayout());
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(s, "class=\"bar\""), 0u);
}

TEST(Svg, StackedBarsKeepOrder) {
  BarLayout l({Bar{0, Rational(0), Rational(0), Rational(4)}, Bar{1, Rational(1), Rational(1), Rational(3)},
               Bar{2, Rational(2), Rational(0), Rational(2)}});
  const std::string s = render_svg(l);
  EXPECT_EQ(count(s, "class=\"bar\""), 3u);
  std::regex re("data-id=\"(\\d)\" x1=\"[-0-9.]+\" y1=\"([-0-9.]+)\"");
  std::vector<double> ys;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
    ys.push_back(std::stod((*it)[2]));
  ASSERT_EQ(ys.size(), 3u);
  // SVG y grows downward.
  EXPECT_GT(ys[0], ys[1]);
  EXPECT_GT(ys[1], ys[2]);
  EXPECT_NE(s.find("<metadata>"), std::string::npos);
}

TEST(Svg, DrawingHasOnePolylinePerEdge) {
  std::mt19937 rng(8);
  BarLayout l = oracle::random_layout(rng, 10, 6, 10);
  const PolylineDrawing d = layout_to_quasiplanar(l);
  const std::string s = render_svg(d);
  EXPECT_EQ(count(s, "<polyline"), strong_visibility_graph(l, 1).num_edges());
  EXPECT_EQ(count(s, "stroke=\"red\""), classify_visibility_edges(l).of_color(EdgeColor::red).size());
  EXPECT_EQ(s, render_svg(layout_to_quasiplanar(l)));
}
