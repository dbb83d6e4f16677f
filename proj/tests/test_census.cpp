#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "hypermotif/census.hpp"
#include "census_oracle.hpp"
#include "random_graphs.hpp"

using namespace hypermotif;

using namespace hypermotif::testkit;

namespace {

// Mutual, asymmetric and null dyad counts of a triad pattern.
std::array<int, 3> man(int code) {
  Adj3 a = decode(code);
  std::array<int, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int k = a[i][j] + a[j][i];
      ++r[k == 2 ? 0 : (k == 1 ? 1 : 2)];
    }
  return r;
}

}  // namespace

TEST(Canonicalization, SixtyFourPatternsFormSixteenClasses) {
  std::set<int> codes;
  std::set<int> connected;
  for (int p = 0; p < kTriadPatternCount; ++p) {
    auto c = canonical_class(static_cast<TriadPattern>(p));
    EXPECT_EQ(c.code, oracle_canonical(p));
    codes.insert(c.code);
    if (c.connected) connected.insert(c.code);
  }
  EXPECT_EQ(codes.size(), 16u);
  EXPECT_EQ(connected.size(), 13u);
}

TEST(Canonicalization, InvariantUnderAllRelabelings) {
  std::array<int, 3> perm{0, 1, 2};
  for (int p = 0; p < kTriadPatternCount; ++p) {
    auto base = canonical_class(static_cast<TriadPattern>(p));
    perm = {0, 1, 2};
    do {
      auto q = permute_pattern(static_cast<TriadPattern>(p), perm);
      EXPECT_EQ(canonical_class(q), base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Canonicalization, NamesAgreeWithDyadCounts) {
  std::set<std::string> names;
  for (const auto& c : triad_classes()) {
    auto name = c.name();
    names.insert(name);
    auto m = man(c.code);
    ASSERT_GE(name.size(), 3u);
    EXPECT_EQ(name[0] - '0', m[0]) << name;
    EXPECT_EQ(name[1] - '0', m[1]) << name;
    EXPECT_EQ(name[2] - '0', m[2]) << name;
    EXPECT_EQ(motif_class_from_name(name), c);
  }
  EXPECT_EQ(names.size(), 16u);
}

TEST(Canonicalization, FeedForwardLoopAndCycle) {
  TriadPattern ffl = static_cast<TriadPattern>((1 << triad_bit(0, 1)) | (1 << triad_bit(1, 2)) |
                                               (1 << triad_bit(0, 2)));
  TriadPattern cycle = static_cast<TriadPattern>((1 << triad_bit(0, 1)) | (1 << triad_bit(1, 2)) |
                                                 (1 << triad_bit(2, 0)));
  EXPECT_EQ(canonical_class(ffl).name(), "030T");
  EXPECT_EQ(canonical_class(ffl).alias(), "FFL");
  EXPECT_EQ(canonical_class(cycle).name(), "030C");
  EXPECT_EQ(canonical_class(cycle).alias(), "LOOP3");
  EXPECT_EQ(motif_class_from_name("FFL"), canonical_class(ffl));
  EXPECT_TRUE(motif_class_from_name("SL").is_self_loop());
  EXPECT_THROW(motif_class_from_name("999X"), std::invalid_argument);
}

TEST(Census, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto n = 5 + seed * 2;
    auto g = testkit::random_digraph(n, 0.05 + 0.02 * static_cast<double>(seed % 7), seed, 0.1);
    auto c = triad_census(g);
    auto expected = oracle_census(g);
    for (int i = 0; i < kTriadClassCount; ++i) EXPECT_EQ(c.triads[i], expected[i]) << "seed " << seed;
    EXPECT_EQ(c.self_loops, g.self_loop_count());
    EXPECT_EQ(c, triad_census_brute_force(g));
  }
}

TEST(Census, TotalIsNumberOfTriples) {
  auto g = testkit::random_digraph(33, 0.1, 7);
  auto c = triad_census(g);
  std::uint64_t total = 0;
  for (auto x : c.triads) total += x;
  EXPECT_EQ(total, 33u * 32u * 31u / 6u);
}

TEST(Census, InvariantUnderRelabeling) {
  auto g = testkit::random_digraph(30, 0.12, 21, 0.1);
  std::vector<NodeIndex> perm(g.node_count());
  for (NodeIndex i = 0; i < perm.size(); ++i) perm[i] = static_cast<NodeIndex>(perm.size() - 1 - i);
  EXPECT_EQ(triad_census(g), triad_census(g.relabeled(perm)));
}

TEST(Census, DistanceIsL1) {
  Census a, b;
  a.triads[3] = 5;
  b.triads[3] = 2;
  a.self_loops = 1;
  b.self_loops = 4;
  EXPECT_EQ(census_distance(a, b), 6u);
  EXPECT_EQ(census_distance(a, a), 0u);
}

TEST(Roles, FeedForwardLoopHasThreeOrbits) {
  auto orbits = role_orbits(motif_class_from_name("FFL"));
  ASSERT_EQ(orbits.size(), 3u);
  EXPECT_EQ(orbits[0].degree_signature(), (std::pair<int, int>{2, 0}));
  EXPECT_EQ(orbits[1].degree_signature(), (std::pair<int, int>{1, 1}));
  EXPECT_EQ(orbits[2].degree_signature(), (std::pair<int, int>{0, 2}));
  EXPECT_EQ(orbits[1].label(), "FFL[1]");
  EXPECT_EQ(role_orbits(motif_class_from_name("LOOP3")).size(), 1u);
  EXPECT_EQ(role_orbits(MotifClass::self_loop()).size(), 1u);
  EXPECT_THROW(role_orbits(motif_class_from_name("003")), std::invalid_argument);
}

TEST(Roles, OrbitsPartitionPositionsWithEqualDegrees) {
  for (const auto& c : triad_classes()) {
    if (!c.connected) continue;
    std::set<int> seen;
    for (const auto& o : role_orbits(c)) {
      for (int p : o.positions) EXPECT_TRUE(seen.insert(p).second);
      auto sig = o.degree_signature();
      auto a = decode(c.code);
      for (int p : o.positions) {
        int out = 0, in = 0;
        for (int q = 0; q < 3; ++q) {
          out += a[p][q];
          in += a[q][p];
        }
        EXPECT_EQ(sig, (std::pair<int, int>{out, in})) << c.name();
      }
    }
    EXPECT_EQ(seen.size(), 3u);
  }
}

TEST(Roles, AssignmentOnTwoFeedForwardLoops) {
  // x->y->z, x->z and x->y2->z share input and output.
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 2}, {3, 3}};
  auto g = DirectedGraph::with_anonymous_nodes(4, edges);
  std::vector<MotifClass> classes{motif_class_from_name("FFL"), MotifClass::self_loop()};
  auto ra = role_assignment(g, classes);
  auto ffl = classes[0];
  EXPECT_EQ(ra.members({ffl, 0}), (std::vector<NodeIndex>{0}));
  EXPECT_EQ(ra.members({ffl, 1}), (std::vector<NodeIndex>{1, 3}));
  EXPECT_EQ(ra.members({ffl, 2}), (std::vector<NodeIndex>{2}));
  EXPECT_EQ(ra.roles.at({ffl, 0}).at(0), 2u);
  EXPECT_EQ(ra.members({MotifClass::self_loop(), 0}), (std::vector<NodeIndex>{3}));
  EXPECT_EQ(ra.participating_nodes(), (std::vector<NodeIndex>{0, 1, 2, 3}));
}

TEST(MotifScores, ZeroVarianceGivesInfiniteZ) {
  Census real;
  real.triads[triad_class_index(motif_class_from_name("FFL"))] = 5;
  std::vector<Census> ens(3);
  auto scores = motif_scores(real, ens);
  bool found = false;
  for (const auto& s : scores) {
    if (s.motif == motif_class_from_name("FFL")) {
      found = true;
      EXPECT_TRUE(s.infinite_z);
      EXPECT_TRUE(std::isinf(s.z) && s.z > 0);
      EXPECT_TRUE(s.significant);
    } else {
      EXPECT_FALSE(s.infinite_z);
      EXPECT_EQ(s.z, 0.0);
    }
  }
  EXPECT_TRUE(found);
  auto motifs = find_motifs(real, ens);
  ASSERT_EQ(motifs.size(), 1u);
  EXPECT_THROW(find_motifs(real, std::span<const Census>{}), std::invalid_argument);
}

TEST(MotifScores, SampleStandardDeviation) {
  Census real;
  auto ffl = triad_class_index(motif_class_from_name("FFL"));
  real.triads[ffl] = 10;
  std::vector<Census> ens(3);
  ens[0].triads[ffl] = 1;
  ens[1].triads[ffl] = 2;
  ens[2].triads[ffl] = 3;
  for (const auto& s : motif_scores(real, ens)) {
    if (s.motif != motif_class_from_name("FFL")) continue;
    EXPECT_DOUBLE_EQ(s.mean, 2.0);
    EXPECT_DOUBLE_EQ(s.stddev, 1.0);
    EXPECT_DOUBLE_EQ(s.z, 8.0);
  }
}
