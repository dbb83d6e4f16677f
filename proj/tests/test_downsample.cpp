#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hypermotif/downsample.hpp"
#include "random_graphs.hpp"

using namespace hypermotif;

namespace {

bool adjacent_or_loop(const DirectedGraph& g, NodeIndex from, NodeIndex to) {
  if (from == to) return g.has_self_loop(from);
  return g.has_edge(from, to) || g.has_edge(to, from);
}

}  // namespace

TEST(DownsampleConfig, Validation) {
  DownsampleConfig cfg;
  cfg.sz = 2;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.walk_probability = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_anchor_draws = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Downsample, WalkStepsFollowEdgesOnConnectedGraph) {
  auto g = testkit::random_digraph(400, 0.02, 13, 0.05);
  DownsampleConfig cfg;
  cfg.sz = 150;
  cfg.rng_seed = 5;
  auto r = downsample(g, cfg);
  ASSERT_EQ(r.anchor_draws, 1u);
  ASSERT_EQ(r.sequence.size(), cfg.sz + 1);  // s_0 .. s_sz
  const NodeIndex anchor = r.sequence.front();
  for (std::size_t i = 1; i < r.sequence.size(); ++i) {
    EXPECT_TRUE(adjacent_or_loop(g, r.sequence[i - 1], r.sequence[i]) ||
                adjacent_or_loop(g, anchor, r.sequence[i]))
        << "entry " << i;
  }
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Downsample, ResultIsInducedOnUniqueNodes) {
  auto g = testkit::random_digraph(300, 0.015, 21, 0.1);
  DownsampleConfig cfg;
  cfg.sz = 120;
  cfg.rng_seed = 9;
  auto r = downsample(g, cfg);
  std::set<NodeIndex> unique(r.sequence.begin(), r.sequence.end());
  EXPECT_EQ(unique.size(), r.nodes.size());
  std::set<NodeIndex> listed(r.nodes.begin(), r.nodes.end());
  EXPECT_EQ(unique, listed);
  ASSERT_EQ(r.graph.node_count(), r.nodes.size());
  for (NodeIndex i = 0; i < r.nodes.size(); ++i) {
    EXPECT_EQ(r.graph.name(i), g.name(r.nodes[i]));
    for (NodeIndex j = 0; j < r.nodes.size(); ++j)
      EXPECT_EQ(r.graph.has_edge(i, j), g.has_edge(r.nodes[i], r.nodes[j]));
  }
}

TEST(Downsample, RestartsOnSmallComponents) {
  // Many disjoint 2-node components: the walk cannot collect sz/3/2 nodes
  // without redrawing the anchor.
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i < 200; i += 2) edges.push_back({i, i + 1});
  auto g = DirectedGraph::with_anonymous_nodes(200, edges);
  DownsampleConfig cfg;
  cfg.sz = 60;
  cfg.rng_seed = 3;
  auto r = downsample(g, cfg);
  EXPECT_GT(r.anchor_draws, 1u);
  EXPECT_GT(r.sequence.size(), cfg.sz);
  EXPECT_GE(r.nodes.size(), cfg.sz / 3);
}

TEST(Downsample, BudgetExhaustionWarns) {
  std::vector<Edge> edges{{0, 1}};
  auto g = DirectedGraph::with_anonymous_nodes(2, edges);
  DownsampleConfig cfg;
  cfg.sz = 30;
  cfg.max_anchor_draws = 4;
  auto r = downsample(g, cfg);
  EXPECT_EQ(r.nodes.size(), 2u);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Downsample, IsolatedGraphFails) {
  auto g = DirectedGraph::with_anonymous_nodes(10, std::vector<Edge>{});
  EXPECT_THROW(downsample(g, DownsampleConfig{}), DownsampleError);
}

TEST(Downsample, Deterministic) {
  auto g = testkit::random_digraph(300, 0.01, 2);
  DownsampleConfig cfg;
  cfg.rng_seed = 11;
  auto a = downsample(g, cfg), b = downsample(g, cfg);
  EXPECT_EQ(a.sequence, b.sequence);
  cfg.rng_seed = 12;
  EXPECT_NE(downsample(g, cfg).sequence, a.sequence);
}

TEST(KsDistance, Oracles) {
  EXPECT_DOUBLE_EQ(ks_distance({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(ks_distance({1, 2}, {3, 4}), 1.0);
  // ECDFs at x=2: 2/3 vs 1/4.
  EXPECT_NEAR(ks_distance({1, 2, 3}, {2.5, 3, 4, 1.5}), 2.0 / 3.0 - 0.25, 1e-12);
  EXPECT_THROW(ks_distance({}, {1}), std::invalid_argument);
}

TEST(ValidateDownsample, RejectsForeignSample) {
  auto g = testkit::random_digraph(50, 0.1, 1);
  auto other = DirectedGraph::from_edges({"zz", "yy"}, std::vector<Edge>{{0, 1}});
  NullModelConfig cfg;
  cfg.ensemble_size = 4;
  EXPECT_THROW(validate_downsample(g, other, cfg), std::invalid_argument);
}

TEST(ValidateDownsample, IdenticalGraphHasZeroDistance) {
  auto g = testkit::planted_ffl_self_loops(90, 120, 20, 4);
  NullModelConfig cfg;
  cfg.ensemble_size = 20;
  auto rep = validate_downsample(g, g, cfg);
  EXPECT_DOUBLE_EQ(rep.ks_distance, 0.0);
  EXPECT_TRUE(rep.same_motifs);
  EXPECT_EQ(rep.motifs_full, rep.motifs_sample);
}
