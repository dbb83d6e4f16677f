#include "random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hypermotif/rng.hpp"

namespace hypermotif::testkit {

DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed, double loop_p) {
  Rng rng(seed);
  std::bernoulli_distribution edge(p), loop(loop_p);
  std::vector<Edge> edges;
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (u == v ? loop(rng) : edge(rng)) edges.push_back({u, v});
    }
  }
  return DirectedGraph::with_anonymous_nodes(n, edges);
}

DirectedGraph random_digraph_edges(std::size_t n, std::size_t e, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<NodeIndex> node(0, static_cast<NodeIndex>(n - 1));
  std::set<std::pair<NodeIndex, NodeIndex>> set;
  while (set.size() < e) {
    NodeIndex u = node(rng), v = node(rng);
    if (u != v) set.insert({u, v});
  }
  std::vector<Edge> edges;
  for (auto [u, v] : set) edges.push_back({u, v});
  return DirectedGraph::with_anonymous_nodes(n, edges);
}

DirectedGraph planted_ffl_self_loops(std::size_t n, std::size_t background, std::size_t k,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::set<std::pair<NodeIndex, NodeIndex>> set;
  for (std::size_t i = 0; i < k; ++i) {
    NodeIndex x = perm[3 * i], y = perm[3 * i + 1], z = perm[3 * i + 2];
    set.insert({x, y});
    set.insert({y, z});
    set.insert({x, z});
  }
  std::uniform_int_distribution<NodeIndex> node(0, static_cast<NodeIndex>(n - 1));
  while (set.size() < 3 * k + background) {
    NodeIndex u = node(rng), v = node(rng);
    if (u != v && !set.count({v, u})) set.insert({u, v});
  }
  for (std::size_t i = 0; i < k; ++i) set.insert({perm[3 * i + 1], perm[3 * i + 1]});

  std::vector<Edge> edges;
  for (auto [u, v] : set) edges.push_back({u, v});
  return DirectedGraph::with_anonymous_nodes(n, edges);
}

}  // namespace hypermotif::testkit
