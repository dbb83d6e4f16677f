#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypermotif/census.hpp"
#include "hypermotif/graph.hpp"
#include "hypermotif/small_digraph.hpp"

namespace hypermotif {

using BigInt = boost::multiprecision::cpp_int;

/// A motif as a labeled pattern on positions 0..n-1. Self-loops appear on the
/// diagonal (the SL motif is the 1-node pattern with a loop).
struct SmallMotif {
  std::string name;
  Pattern pattern;

  int size() const { return pattern.n; }
};

/// Known names: "SL", "MUTUAL" (alias "DYAD"), the signed two-node feedback
/// circuits "TOGGLE", "LOCKON", "OSC", every triad class label accepted by
/// motif_class_from_name ("FFL", "030T", "LOOP3", ...), "C1FFL" and "I1FFL".
/// Triads use the canonical position order, so for the FFL position 0 is the
/// input, 1 the intermediate and 2 the output. Throws std::invalid_argument.
SmallMotif small_motif(const std::string& name);
SmallMotif small_motif(const MotifClass& c);

/// min(n_a, n_b) - 1.
int max_shared_nodes(int n_a, int n_b);

struct InteractionCount {
  BigInt labeled;    // 2^(2 n_a n_b) directed, 2^(n_a n_b) undirected
  BigInt non_empty;  // labeled - 1: at least one linking edge
};

/// Throws std::invalid_argument for sizes < 1.
InteractionCount count_interaction_topologies(int n_a, int n_b, bool directed = true);

/// Directed linkages of two given motifs counted up to relabelings that map
/// each motif onto itself (and swap them when they are the same motif), by
/// Burnside's lemma. The empty linkage is included.
BigInt count_unique_interactions(const SmallMotif& a, const SmallMotif& b);

/// One representative per class counted by count_unique_interactions: A on
/// nodes 0..n_a-1, B after it, linking edges activating. Throws
/// std::invalid_argument above 16 linking pairs.
std::vector<Pattern> enumerate_unique_interactions(const SmallMotif& a, const SmallMotif& b);

struct CombinationTopology {
  SmallMotif motif_a;
  SmallMotif motif_b;
  std::vector<std::pair<int, int>> sharing;  // (position in A, position in B)
  Pattern merged;            // core: union of both motifs' edges
  std::vector<int> a_nodes;  // position of A -> merged node (the identity)
  std::vector<int> b_nodes;  // position of B -> merged node

  int shared_count() const { return static_cast<int>(sharing.size()); }
  /// Ordered node pairs not inside a single motif, in (u, v) order.
  std::vector<std::pair<int, int>> eligible_pairs() const;
  /// e.g. "FFL{1}*SL{0}".
  std::string label() const;
};

/// Sharing maps with 1 <= N_v <= max_shared_nodes (N_v = 1 when exactly one
/// motif is the 1-node SL), injective both ways, whose merged core keeps both
/// motifs as induced subgraphs (self-loops aside) without sign conflicts.
/// Cores are deduplicated by canonical form with nodes colored shared vs.
/// unshared, and additionally A-only vs. B-only when the motifs differ.
std::vector<CombinationTopology> enumerate_core_combinations(const SmallMotif& a,
                                                             const SmallMotif& b);

/// The core plus every subset of eligible pairs as extra activating edges,
/// indexed by subset bitmask over eligible_pairs() (index 0 is the core).
/// Throws std::invalid_argument above 20 eligible pairs.
std::vector<Pattern> enumerate_extensions(const CombinationTopology& core);

struct ExtensionHistogram {
  std::vector<std::pair<int, int>> eligible;   // bit k of a bucket index
  std::vector<std::uint64_t> counts;           // size 2^eligible
  std::uint64_t total() const;
};

/// Occurrences of the core in g: induced occurrences of A and B that share
/// nodes as the sharing map says and nothing else. Each merged node set is
/// counted once, in the lowest bucket among its embeddings; the bucket is the
/// set of eligible pairs present in g. Throws for cores over 6 nodes.
ExtensionHistogram count_extension_frequencies(const DirectedGraph& g,
                                               const CombinationTopology& core);

}  // namespace hypermotif
