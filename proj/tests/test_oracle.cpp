#include <fstream>

#include <gtest/gtest.h>

#include "barvis/io.hpp"
#include "barvis/oracle.hpp"

using namespace barvis;

TEST(Preimage, TriangleHasOne) {
  auto r = search_1flow_preimage(complete_graph(3), SearchMode::all_dags);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.candidates, 27u);
  EXPECT_EQ(square_of_digraph(*r.witness), complete_graph(3));
  EXPECT_TRUE(r.witness->topological_order().has_value());
}

TEST(Preimage, SquareOfPathIsFound) {
  DiGraph p(5);
  for (Vertex v = 0; v + 1 < 5; ++v) p.add_arc(v, v + 1);
  auto r = search_1flow_preimage(square_of_digraph(p), SearchMode::all_dags);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(square_of_digraph(*r.witness), square_of_digraph(p));
}

TEST(Preimage, S3HasNone) {
  auto r = search_1flow_preimage(s3_graph(), SearchMode::all_dags);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.candidates, 14348907u);
}

TEST(Preimage, CompleteGraphsUpToSevenHaveOne) {
  for (int n = 2; n <= 7; ++n) {
    auto r = search_1flow_preimage(complete_graph(n), SearchMode::hampath);
    ASSERT_TRUE(r.witness) << n;
    EXPECT_EQ(square_of_digraph(*r.witness), complete_graph(n));
    EXPECT_TRUE(is_k_flow(*r.witness, 1).ok);
  }
  auto k7 = search_1flow_preimage(complete_graph(7), SearchMode::hampath_planar);
  ASSERT_TRUE(k7.witness);
  EXPECT_TRUE(is_planar(k7.witness->underlying()));
}

TEST(Preimage, K8HasNoPlanarOne) {
  auto r = search_1flow_preimage(complete_graph(8), SearchMode::hampath_planar);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.candidates, 1u << 21);
}

TEST(Preimage, RejectsOversizedInput) {
  EXPECT_THROW(search_1flow_preimage(complete_graph(7), SearchMode::all_dags), PreconditionError);
  EXPECT_THROW(search_1flow_preimage(complete_graph(9), SearchMode::hampath), PreconditionError);
  EXPECT_THROW(search_1flow_preimage(cycle_graph(5), SearchMode::hampath_planar), PreconditionError);
}

TEST(LayoutSearch, FindsFrozenS3Layout) {
  auto r = search_strong1_layout(s3_graph());
  ASSERT_TRUE(r.layout);
  EXPECT_EQ(r.width, 2);
  EXPECT_EQ(strong_visibility_graph(*r.layout, 1), s3_graph());
  const BarLayout frozen = io::parse<BarLayout>(io::read_json_file(BARVIS_FIXTURE_DIR "/s3_layout.json"));
  EXPECT_EQ(*r.layout, frozen);
}

TEST(LayoutSearch, K5AndTriangle) {
  auto k5 = search_strong1_layout(complete_graph(5));
  ASSERT_TRUE(k5.layout);
  EXPECT_EQ(strong_visibility_graph(*k5.layout, 1), complete_graph(5));
  EXPECT_TRUE(search_strong1_layout(cycle_graph(3)).layout);
}

// Triangle-free graphs with a cycle have no strong 1-visibility layout.
TEST(LayoutSearch, ShortCyclesHaveNone) {
  for (int n = 4; n <= 5; ++n) {
    auto r = search_strong1_layout(cycle_graph(n), 4);
    EXPECT_FALSE(r.layout) << n;
    EXPECT_GT(r.nodes, 0u);
  }
}

TEST(Audit, CompleteGraphs) {
  auto k7 = bound_audit(complete_graph(7), AuditClass::oneplanar);
  EXPECT_EQ(k7.verdict, AuditVerdict::bound_exceeded);
  EXPECT_EQ(*k7.bound, 20);
  EXPECT_EQ(k7.m, 21);
  EXPECT_EQ(bound_audit(complete_graph(8), AuditClass::web1).verdict, AuditVerdict::consistent);
  EXPECT_EQ(bound_audit(complete_graph(9), AuditClass::web1).verdict, AuditVerdict::bound_exceeded);
  EXPECT_EQ(bound_audit(complete_graph(6), AuditClass::oneplanar).verdict, AuditVerdict::consistent);
  EXPECT_EQ(bound_audit(complete_graph(4), AuditClass::web1).verdict, AuditVerdict::not_applicable);
  EXPECT_EQ(bound_audit(complete_graph(9), AuditClass::quasiplanar).verdict, AuditVerdict::informational);
}

TEST(Audit, GridSquareExceedsWeb1Bound) {
  auto g = grid_2flow_counterexample(52);
  auto r = bound_audit(square_of_digraph(g.network.digraph), AuditClass::web1);
  EXPECT_EQ(r.verdict, AuditVerdict::bound_exceeded);
  EXPECT_EQ(*r.bound, 16204);
}

TEST(Audit, NamesRoundTrip) {
  for (auto c : {AuditClass::web1, AuditClass::oneplanar, AuditClass::quasiplanar}) EXPECT_EQ(parse_audit_class(to_string(c)), c);
  for (auto m : {SearchMode::all_dags, SearchMode::hampath, SearchMode::hampath_planar})
    EXPECT_EQ(parse_search_mode(to_string(m)), m);
  EXPECT_FALSE(parse_search_mode("bogus"));
}
