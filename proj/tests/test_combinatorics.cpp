#include <gtest/gtest.h>

#include <set>

#include "hypermotif/combinatorics.hpp"

using namespace hypermotif;

namespace {

// Pattern induced on positions `nodes`, ignoring signs and self-loops.
std::uint64_t shape(const Pattern& p, const std::vector<int>& nodes) {
  return p.induced(nodes).off_diagonal().adj;
}

}  // namespace

TEST(Counting, MaxSharedNodes) {
  EXPECT_EQ(max_shared_nodes(3, 3), 2);
  EXPECT_EQ(max_shared_nodes(1, 3), 0);
  EXPECT_EQ(max_shared_nodes(2, 3), 1);
}

TEST(Counting, LabeledInteractions) {
  EXPECT_EQ(count_interaction_topologies(3, 3).labeled, BigInt(262144));
  EXPECT_EQ(count_interaction_topologies(3, 3).non_empty, BigInt(262143));
  EXPECT_EQ(count_interaction_topologies(1, 1, false).labeled, BigInt(2));
  EXPECT_EQ(count_interaction_topologies(2, 3).labeled, BigInt(4096));
  EXPECT_EQ(count_interaction_topologies(8, 8).labeled, BigInt(1) << 128);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      EXPECT_EQ(count_interaction_topologies(a, b).labeled, count_interaction_topologies(b, a).labeled);
  EXPECT_THROW(count_interaction_topologies(0, 3), std::invalid_argument);
}

TEST(Counting, UniqueInteractionsHandCases) {
  // Two self-loops: no link, one link (either direction), both links.
  EXPECT_EQ(count_unique_interactions(small_motif("SL"), small_motif("SL")), BigInt(3));
  // SL with a mutual dyad whose two nodes are interchangeable: (16 + 4) / 2.
  EXPECT_EQ(count_unique_interactions(small_motif("SL"), small_motif("MUTUAL")), BigInt(10));
}

TEST(Counting, BurnsideMatchesEnumeration) {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"SL", "SL"}, {"SL", "MUTUAL"}, {"SL", "FFL"}, {"MUTUAL", "MUTUAL"},
      {"FFL", "MUTUAL"}, {"LOOP3", "SL"}, {"TOGGLE", "SL"}};
  for (const auto& [a, b] : pairs) {
    auto ma = small_motif(a), mb = small_motif(b);
    auto reps = enumerate_unique_interactions(ma, mb);
    EXPECT_EQ(BigInt(reps.size()), count_unique_interactions(ma, mb)) << a << "+" << b;
    std::set<Pattern> distinct(reps.begin(), reps.end());
    EXPECT_EQ(distinct.size(), reps.size());
  }
  EXPECT_THROW(enumerate_unique_interactions(small_motif("FFL"), small_motif("FFL")),
               std::invalid_argument);
}

TEST(Combinations, KnownCounts) {
  EXPECT_EQ(enumerate_core_combinations(small_motif("FFL"), small_motif("FFL")).size(), 12u);
  EXPECT_EQ(enumerate_core_combinations(small_motif("MUTUAL"), small_motif("MUTUAL")).size(), 1u);
  EXPECT_EQ(enumerate_core_combinations(small_motif("MUTUAL"), small_motif("FFL")).size(), 3u);
}

TEST(Combinations, SelfLoopAttachesToEachRole) {
  auto cores = enumerate_core_combinations(small_motif("FFL"), small_motif("SL"));
  ASSERT_EQ(cores.size(), 3u);
  std::set<std::string> labels;
  for (const auto& c : cores) labels.insert(c.label());
  EXPECT_TRUE(labels.count("FFL{1}*SL{0}"));
}

TEST(Combinations, CoresKeepBothMotifsInduced) {
  const std::vector<std::string> names{"FFL", "MUTUAL", "LOOP3", "021C", "SL"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      auto ma = small_motif(a), mb = small_motif(b);
      if (a == "SL" && b == "SL") continue;
      for (const auto& core : enumerate_core_combinations(ma, mb)) {
        EXPECT_GE(core.shared_count(), 1);
        if (ma.size() > 1 && mb.size() > 1)
          EXPECT_LE(core.shared_count(), max_shared_nodes(ma.size(), mb.size()));
        std::vector<int> all_a(ma.size()), all_b(mb.size());
        for (int i = 0; i < ma.size(); ++i) all_a[i] = i;
        for (int i = 0; i < mb.size(); ++i) all_b[i] = i;
        EXPECT_EQ(shape(core.merged, core.a_nodes), shape(ma.pattern, all_a)) << core.label();
        EXPECT_EQ(shape(core.merged, core.b_nodes), shape(mb.pattern, all_b)) << core.label();
      }
    }
  }
}

TEST(Extensions, FeedbackWithFeedForwardGivesSixteen) {
  for (const auto& core : enumerate_core_combinations(small_motif("MUTUAL"), small_motif("FFL"))) {
    EXPECT_EQ(core.eligible_pairs().size(), 4u);
    auto ext = enumerate_extensions(core);
    ASSERT_EQ(ext.size(), 16u);
    EXPECT_EQ(ext[0], core.merged);
    std::set<Pattern> distinct(ext.begin(), ext.end());
    EXPECT_EQ(distinct.size(), 16u);
  }
}

TEST(Extensions, CountIsPowerOfEligiblePairs) {
  for (const auto& core : enumerate_core_combinations(small_motif("FFL"), small_motif("FFL"))) {
    auto ext = enumerate_extensions(core);
    EXPECT_EQ(ext.size(), std::size_t{1} << core.eligible_pairs().size());
    std::set<Pattern> distinct(ext.begin(), ext.end());
    EXPECT_EQ(distinct.size(), ext.size());
  }
  // A self-loop brings no node of its own, so there is nothing to extend.
  auto sl = enumerate_core_combinations(small_motif("FFL"), small_motif("SL"));
  for (const auto& core : sl) EXPECT_EQ(enumerate_extensions(core).size(), 1u);
}

TEST(ExtensionFrequencies, SingleCoreAndOneExtraEdge) {
  auto cores = enumerate_core_combinations(small_motif("MUTUAL"), small_motif("FFL"));
  const auto& core = cores.front();
  const int n = core.merged.n;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (core.merged.has(i, j)) edges.push_back({static_cast<NodeIndex>(i), static_cast<NodeIndex>(j)});
  auto h = count_extension_frequencies(DirectedGraph::with_anonymous_nodes(n, edges), core);
  EXPECT_EQ(h.total(), 1u);
  EXPECT_EQ(h.counts[0], 1u);

  auto [u, v] = core.eligible_pairs().front();
  edges.push_back({static_cast<NodeIndex>(u), static_cast<NodeIndex>(v)});
  h = count_extension_frequencies(DirectedGraph::with_anonymous_nodes(n, edges), core);
  EXPECT_EQ(h.total(), 1u);
  EXPECT_EQ(h.counts[1], 1u);
}
