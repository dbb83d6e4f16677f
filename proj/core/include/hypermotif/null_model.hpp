#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypermotif/census.hpp"
#include "hypermotif/graph.hpp"
#include "hypermotif/rng.hpp"

namespace hypermotif {

struct AnnealConfig {
  double initial_temperature = 2.0;
  double cooling_factor = 0.99997;  // applied after every proposal
  std::uint64_t max_iterations = 500000;  // per attempt
  /// Extra attempts from the starting graph when an attempt ends above
  /// target_residual. The best graph over all attempts is returned.
  std::uint32_t restarts = 5;
  std::uint64_t target_residual = 0;
};

struct NullModelConfig {
  std::size_t ensemble_size = 100;
  double swap_multiplier = 100.0;  // mixing swap attempts per swappable edge
  AnnealConfig anneal;
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct RewireOptions {
  /// Self-loops are frozen by default. When true they join the swap pool and
  /// are dissolved by swaps (new self-loops are never created).
  bool swap_self_loops = false;
};

using TriadDelta = std::array<std::int64_t, kTriadClassCount>;

/// Mutable edge store used by the rewiring and annealing loops.
class RewiringState {
 public:
  explicit RewiringState(const DirectedGraph& g, bool swap_self_loops = false);

  struct Move {
    std::size_t first = 0, second = 0;  // indices into the swap pool
    NodeIndex a = 0, b = 0, c = 0, d = 0;  // (a->b, c->d) => (a->d, c->b)
  };

  std::size_t pool_size() const { return pool_.size(); }

  /// Draws two pool edges; returns false when the swap is invalid (shared
  /// endpoint, would create a self-loop or a duplicate edge).
  bool propose(Rng& rng, Move& move) const;
  /// Proposal aimed at linking two nodes at undirected distance <= 2: picks a
  /// pool edge x->y and a neighbour z of y, then tries to add x->z or z->x by
  /// swapping an out-edge of the source with an in-edge of the target.
  bool propose_closing(Rng& rng, Move& move) const;
  /// Closing proposal anchored on an edge of a mutual dyad (falls back to
  /// propose_closing when there is none).
  bool propose_near_mutual(Rng& rng, Move& move) const;
  void apply(const Move& move);

  /// Change of the triad census caused by `move`, computed from the triads
  /// that contain one of the four rewired node pairs. Requires a, b, c, d to
  /// be distinct.
  TriadDelta census_delta(const Move& move) const;

  bool has_edge(NodeIndex u, NodeIndex v) const;
  DirectedGraph to_graph() const;
  /// Graph made of the frozen edges plus `pool` (a snapshot of pool()).
  DirectedGraph to_graph(std::span<const Edge> pool) const;

  /// Swap-pool edges; with frozen self-loops these are all non-loop edges.
  const std::vector<Edge>& pool() const { return pool_; }

 private:
  static std::uint64_t key(NodeIndex u, NodeIndex v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }
  void add_edge(NodeIndex u, NodeIndex v, std::size_t pool_index);
  bool check(Move& move) const;
  bool close_around(Edge e, Rng& rng, Move& move) const;
  std::int64_t pool_index(NodeIndex u, NodeIndex v) const;  // -1 when absent
  void refresh_mutual(std::size_t index);
  void remove_edge(NodeIndex u, NodeIndex v);
  void add_pair_delta(NodeIndex x, NodeIndex y, TriadPattern before_xy,
                      TriadPattern after_xy, NodeIndex a, NodeIndex b, NodeIndex c,
                      NodeIndex d, TriadDelta& delta) const;

  std::vector<std::string> names_;
  std::vector<Edge> pool_;
  std::vector<Edge> frozen_;
  struct Adj {
    NodeIndex node;
    std::uint32_t edge;  // index into pool_
  };
  std::vector<std::vector<Adj>> out_, in_;  // non-loop edges only
  std::vector<std::uint32_t> mutual_;      // pool indices of edges whose reverse exists
  std::vector<std::int32_t> mutual_pos_;   // position in mutual_, -1 if absent
  std::vector<std::uint64_t> table_;              // open addressing, linear probing
  std::uint64_t table_mask_ = 0;
  mutable std::vector<std::uint8_t> scratch_bits_;
  mutable std::vector<NodeIndex> scratch_nodes_;

  bool table_contains(std::uint64_t k) const;
  void table_insert(std::uint64_t k);
  void table_erase(std::uint64_t k);
};

/// Degree-preserving randomization by repeated double-edge swaps
/// (swap_multiplier * |pool| attempts; invalid attempts are skipped).
DirectedGraph rewire_degree_preserving(const DirectedGraph& g, const NullModelConfig& cfg,
                                       Rng& rng, const RewireOptions& options = {});

struct AnnealResult {
  DirectedGraph graph;
  std::uint64_t residual = 0;
  std::uint64_t initial_residual = 0;
  std::uint64_t iterations = 0;  // summed over attempts
  std::uint64_t accepted = 0;
  std::uint32_t attempts = 0;
  /// (iteration, best objective) recorded whenever the best-so-far improves.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> best_trace;
};

/// Metropolis annealing over double-edge swaps minimising the L1 distance
/// between the triad census of the current graph and `target`. Returns the
/// best graph seen; residual 0 means the census matches exactly.
AnnealResult anneal_to_census(const DirectedGraph& g_random, const Census& target,
                              const NullModelConfig& cfg, Rng& rng);

struct EnsembleMember {
  DirectedGraph graph;
  std::uint64_t residual = 0;
  std::uint64_t seed = 0;
};

/// ensemble_size members, member i seeded with rng_seed + i, each rewired then
/// annealed to the census of g. `jobs` worker threads; output is in index
/// order and independent of `jobs`.
std::vector<EnsembleMember> generate_ensemble(const DirectedGraph& g,
                                              const NullModelConfig& cfg,
                                              std::size_t jobs = 1);

/// Degree-preserving ensemble without census constraint (members seeded with
/// rng_seed + i), used as the reference for motif significance.
std::vector<DirectedGraph> generate_degree_ensemble(const DirectedGraph& g,
                                                    const NullModelConfig& cfg,
                                                    const RewireOptions& options,
                                                    std::size_t jobs = 1);

}  // namespace hypermotif
