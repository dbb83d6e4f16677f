#include <gtest/gtest.h>

#include "hypermotif/null_model.hpp"
#include "random_graphs.hpp"

using namespace hypermotif;

namespace {

std::vector<Edge> self_loops(const DirectedGraph& g) {
  std::vector<Edge> loops;
  for (const auto& e : g.edges())
    if (e.is_self_loop()) loops.push_back(e);
  return loops;
}

NullModelConfig small_config(std::size_t members, std::uint64_t seed) {
  NullModelConfig cfg;
  cfg.ensemble_size = members;
  cfg.rng_seed = seed;
  return cfg;
}

}  // namespace

TEST(NullModelConfig, RejectsBadValues) {
  NullModelConfig cfg;
  cfg.ensemble_size = 1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.anneal.cooling_factor = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.swap_multiplier = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_NO_THROW(NullModelConfig{}.validate());
}

TEST(Rewire, PreservesDegreesAndSelfLoops) {
  auto g = testkit::random_digraph(60, 0.06, 5, 0.15);
  Rng rng(9);
  auto r = rewire_degree_preserving(g, small_config(2, 0), rng);
  EXPECT_EQ(r.node_count(), g.node_count());
  EXPECT_EQ(r.edge_count(), g.edge_count());
  EXPECT_EQ(degree_sequences(r), degree_sequences(g));
  EXPECT_EQ(self_loops(r), self_loops(g));
  EXPECT_NE(std::vector<Edge>(r.edges().begin(), r.edges().end()),
            std::vector<Edge>(g.edges().begin(), g.edges().end()));
}

TEST(Rewire, SwappedSelfLoopsOnlyDissolve) {
  auto g = testkit::random_digraph(60, 0.06, 6, 0.3);
  Rng rng(1);
  RewireOptions opt;
  opt.swap_self_loops = true;
  auto r = rewire_degree_preserving(g, small_config(2, 0), rng, opt);
  EXPECT_EQ(degree_sequences(r), degree_sequences(g));
  EXPECT_LE(r.self_loop_count(), g.self_loop_count());
  for (const auto& e : self_loops(r)) EXPECT_TRUE(g.has_self_loop(e.src));
}

TEST(RewiringState, CensusDeltaMatchesRecount) {
  auto g = testkit::random_digraph(25, 0.15, 12, 0.1);
  RewiringState state(g);
  Rng rng(3);
  auto before = triad_census(g);
  int checked = 0;
  for (int attempt = 0; attempt < 3000 && checked < 450; ++attempt) {
    RewiringState::Move m;
    bool ok = attempt % 3 == 0   ? state.propose(rng, m)
              : attempt % 3 == 1 ? state.propose_closing(rng, m)
                                 : state.propose_near_mutual(rng, m);
    if (!ok) continue;
    auto delta = state.census_delta(m);
    state.apply(m);
    auto after = triad_census(state.to_graph());
    for (int i = 0; i < kTriadClassCount; ++i) {
      ASSERT_EQ(static_cast<std::int64_t>(after.triads[i]) - static_cast<std::int64_t>(before.triads[i]),
                delta[i])
          << "class " << i << " move " << checked;
    }
    EXPECT_EQ(after.self_loops, before.self_loops);
    before = after;
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Anneal, ReachesCensusOfSmallGraph) {
  auto g = testkit::random_digraph_edges(80, 240, 17);
  auto target = triad_census(g);
  NullModelConfig cfg = small_config(2, 0);
  Rng rng(5);
  auto start = rewire_degree_preserving(g, cfg, rng);
  auto r = anneal_to_census(start, target, cfg, rng);
  EXPECT_EQ(r.residual, census_distance(triad_census(r.graph), target));
  EXPECT_LE(r.residual, r.initial_residual);
  EXPECT_EQ(r.residual, 0u);
  EXPECT_EQ(degree_sequences(r.graph), degree_sequences(g));
  ASSERT_FALSE(r.best_trace.empty());
  for (std::size_t i = 1; i < r.best_trace.size(); ++i) {
    EXPECT_LT(r.best_trace[i].second, r.best_trace[i - 1].second);
    EXPECT_GE(r.best_trace[i].first, r.best_trace[i - 1].first);
  }
}

TEST(Ensemble, MembersHonourTheContract) {
  auto g = testkit::random_digraph(70, 0.05, 23, 0.1);
  auto target = triad_census(g);
  auto members = generate_ensemble(g, small_config(6, 100));
  ASSERT_EQ(members.size(), 6u);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    EXPECT_EQ(m.seed, 100 + i);
    EXPECT_EQ(m.graph.node_count(), g.node_count());
    EXPECT_EQ(m.graph.edge_count(), g.edge_count());
    EXPECT_EQ(degree_sequences(m.graph), degree_sequences(g));
    EXPECT_EQ(self_loops(m.graph), self_loops(g));
    EXPECT_EQ(m.residual, census_distance(triad_census(m.graph), target));
    if (m.residual == 0) EXPECT_EQ(triad_census(m.graph), target);
  }
}

TEST(Ensemble, IndependentOfThreadCount) {
  auto g = testkit::random_digraph(50, 0.06, 29);
  auto a = generate_ensemble(g, small_config(4, 7), 1);
  auto b = generate_ensemble(g, small_config(4, 7), 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graph, b[i].graph);
    EXPECT_EQ(a[i].residual, b[i].residual);
  }
}

TEST(Ensemble, DegreeEnsembleRewiresSelfLoopsOnRequest) {
  auto g = testkit::random_digraph(50, 0.06, 31, 0.3);
  RewireOptions opt;
  opt.swap_self_loops = true;
  auto members = generate_degree_ensemble(g, small_config(5, 1), opt);
  ASSERT_EQ(members.size(), 5u);
  bool any_changed = false;
  for (const auto& m : members) {
    EXPECT_EQ(degree_sequences(m), degree_sequences(g));
    any_changed |= m.self_loop_count() != g.self_loop_count();
  }
  EXPECT_TRUE(any_changed);
}
