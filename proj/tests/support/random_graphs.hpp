#pragma once

#include <cstdint>

#include "hypermotif/graph.hpp"

namespace hypermotif::testkit {

/// G(n, p) digraph; self-loops kept with probability loop_p.
DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed, double loop_p = 0.0);

/// Exactly e distinct non-loop edges placed uniformly.
DirectedGraph random_digraph_edges(std::size_t n, std::size_t e, std::uint64_t seed);

/// k FFLs on disjoint random triples, a self-loop on
/// every FFL intermediate, and `background` extra random edges with no
/// 2-cycles.
DirectedGraph planted_ffl_self_loops(std::size_t n, std::size_t background, std::size_t k,
                                     std::uint64_t seed);

}  // namespace hypermotif::testkit
