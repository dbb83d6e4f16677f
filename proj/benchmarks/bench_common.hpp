#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hypermotif/graph.hpp"
#include "hypermotif/rng.hpp"

namespace bench {

inline hypermotif::DirectedGraph random_graph(std::size_t n, std::size_t e, std::uint64_t seed) {
  using hypermotif::NodeIndex;
  hypermotif::Rng rng(seed);
  std::uniform_int_distribution<NodeIndex> node(0, static_cast<NodeIndex>(n - 1));
  std::set<std::pair<NodeIndex, NodeIndex>> set;
  while (set.size() < e) {
    NodeIndex u = node(rng), v = node(rng);
    if (u != v) set.insert({u, v});
  }
  std::vector<hypermotif::Edge> edges;
  for (auto [u, v] : set) edges.push_back({u, v});
  return hypermotif::DirectedGraph::with_anonymous_nodes(n, edges);
}

}  // namespace bench
