#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hypermotif/census.hpp"
#include "hypermotif/graph.hpp"
#include "hypermotif/null_model.hpp"

namespace hypermotif {

/// |a ∩ b| / |a ∪ b| over sorted, duplicate-free ranges; 0 when both are empty.
double jaccard(std::span<const NodeIndex> a, std::span<const NodeIndex> b);

/// Fraction of a role's nodes that fill the role more than once.
double self_role_repetition(const std::map<NodeIndex, std::uint32_t>& role_counts);

struct Enrichment {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n - 1) standard deviation
  double z = 0.0;       // +/-infinity when stddev is 0 and the real value differs
  double p = 1.0;       // one-sided, in the direction of z
  bool degenerate = false;  // zero variance and real == mean: not tested
};

/// Throws std::invalid_argument when fewer than two ensemble values are given.
Enrichment enrichment(double real, std::span<const double> ensemble);

/// Benjamini-Hochberg step-up adjusted p-values, in input order.
std::vector<double> bh_correct(std::span<const double> p_values);

enum class Direction { kNone, kOver, kUnder };
std::string to_string(Direction d);

struct CombinationStat {
  RoleKey role_a;
  RoleKey role_b;  // equal to role_a for a self-repetition index
  double j_real = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
  double z = 0.0;
  double p = 1.0;
  double q = 1.0;
  Direction direction = Direction::kNone;
  bool tested = true;

  bool is_self_repetition() const { return role_a == role_b; }
};

struct DetectConfig {
  /// rng_seed is the root seed; the motif and census ensembles draw from the
  /// "motif-null" and "census-null" streams derived from it.
  NullModelConfig null_model;
  double alpha = 0.05;
  double motif_z_threshold = kDefaultMotifZThreshold;
  std::size_t jobs = 1;
  bool keep_ensemble = false;
};

struct DetectResult {
  Census census;
  std::vector<MotifScore> motifs;   // significant classes, by class order
  std::vector<RoleOrbit> roles;     // the k roles, by (class, orbit)
  std::vector<CombinationStat> stats;  // sorted by q, then by role pair
  std::vector<std::uint64_t> residuals;  // per census-null member
  std::vector<DirectedGraph> ensemble;   // filled when keep_ensemble is set
};

/// Motif significance against a degree-preserving ensemble in which
/// self-loops are also rewired, so the self-loop count is tested like any
/// other class. Returns every tested class with its score.
std::vector<MotifScore> score_motifs(const DirectedGraph& g, const NullModelConfig& cfg,
                                     std::size_t jobs = 1,
                                     double z_threshold = kDefaultMotifZThreshold);

/// Runs the role-overlap pipeline: significant motifs, role sets, pairwise
/// Jaccard and self-repetition indices on g and on every census-preserving
/// ensemble member, Z-scores, one BH family over every tested statistic, and
/// direction calls at alpha.
DetectResult detect(const DirectedGraph& g, const DetectConfig& cfg);

}  // namespace hypermotif
