#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypermotif/census.hpp"
#include "hypermotif/graph.hpp"
#include "hypermotif/null_model.hpp"

namespace hypermotif {

struct DownsampleConfig {
  std::size_t sz = 300;             // length of the sample list
  double walk_probability = 0.85;   // step from s[i-1]; otherwise jump next to s0
  std::uint64_t rng_seed = 0;
  std::size_t max_anchor_draws = 50;  // fresh s0 draws, isolated draws included

  void validate() const;
};

class DownsampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DownsampleResult {
  DirectedGraph graph;                // induced on the unique sampled nodes
  std::vector<NodeIndex> nodes;       // unique nodes of g in first-visit order
  std::vector<NodeIndex> sequence;    // the full sample list, repeats included
  std::size_t anchor_draws = 0;
  std::vector<std::string> warnings;
};

/// Random-walk sampling in three segments of about sz/3 entries each. Every
/// entry is a uniform neighbour of the previous entry with probability
/// walk_probability, else a uniform neighbour of the anchor s0. Neighbourhoods
/// are undirected and include the node itself when it has a self-loop.
/// After the first and second segments the anchor is redrawn (and appended to
/// the list) while the number of unique nodes is below (sz/3)/2 and sz/3
/// respectively; each redraw adds another segment. When the draw budget runs
/// out the sample is returned with a warning. Throws DownsampleError when no
/// non-isolated anchor is found within the budget.
DownsampleResult downsample(const DirectedGraph& g, const DownsampleConfig& cfg);

struct DownsampleReport {
  double ks_distance = 0.0;  // between total-degree distributions
  std::vector<MotifClass> motifs_full;
  std::vector<MotifClass> motifs_sample;
  bool same_motifs = false;
};

/// Compares a sample with its source graph. `gd` must be a non-empty induced
/// subgraph of `g` (matched by node name); otherwise std::invalid_argument.
/// Motif significance uses score_motifs with `motif_cfg` on both graphs.
DownsampleReport validate_downsample(const DirectedGraph& g, const DirectedGraph& gd,
                                     const NullModelConfig& motif_cfg, std::size_t jobs = 1);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_distance(std::vector<double> a, std::vector<double> b);

}  // namespace hypermotif
