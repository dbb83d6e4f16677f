#include "hypermotif/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace hypermotif {

double jaccard(std::span<const NodeIndex> a, std::span<const NodeIndex> b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t uni = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

double self_role_repetition(const std::map<NodeIndex, std::uint32_t>& role_counts) {
  if (role_counts.empty()) return 0.0;
  std::size_t repeated = 0;
  for (const auto& [node, count] : role_counts) {
    if (count >= 2) ++repeated;
  }
  return static_cast<double>(repeated) / static_cast<double>(role_counts.size());
}

Enrichment enrichment(double real, std::span<const double> ensemble) {
  if (ensemble.size() < 2) {
    throw std::invalid_argument("enrichment: need at least two ensemble values");
  }
  Enrichment e;
  const bool constant = std::all_of(ensemble.begin(), ensemble.end(),
                                    [&](double v) { return v == ensemble.front(); });
  if (constant) {
    e.mean = ensemble.front();
    e.stddev = 0.0;
    if (real == e.mean) {
      e.degenerate = true;
      return e;
    }
    e.z = real > e.mean ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
    e.p = 0.0;
    return e;
  }
  const double n = static_cast<double>(ensemble.size());
  e.mean = std::accumulate(ensemble.begin(), ensemble.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : ensemble) ss += (v - e.mean) * (v - e.mean);
  e.stddev = std::sqrt(ss / (n - 1.0));
  e.z = (real - e.mean) / e.stddev;
  // Upper tail for z >= 0, lower tail otherwise.
  e.p = 0.5 * std::erfc(std::abs(e.z) / std::sqrt(2.0));
  return e;
}

std::vector<double> bh_correct(std::span<const double> p_values) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
  std::vector<double> q(m);
  double running = 1.0;
  for (std::size_t r = m; r-- > 0;) {
    const std::size_t i = order[r];
    const double adjusted = p_values[i] * static_cast<double>(m) / static_cast<double>(r + 1);
    running = std::min(running, adjusted);
    q[i] = std::min(running, 1.0);
  }
  return q;
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::kOver:
      return "over";
    case Direction::kUnder:
      return "under";
    case Direction::kNone:
      break;
  }
  return "none";
}

std::vector<MotifScore> score_motifs(const DirectedGraph& g, const NullModelConfig& cfg,
                                     std::size_t jobs, double z_threshold) {
  cfg.validate();
  std::vector<Census> censuses(cfg.ensemble_size);
  RewireOptions options;
  options.swap_self_loops = true;
  detail::run_parallel(cfg.ensemble_size, jobs, [&](std::size_t i) {
    Rng rng(cfg.rng_seed + i);
    censuses[i] = triad_census(rewire_degree_preserving(g, cfg, rng, options));
  });
  return motif_scores(triad_census(g), censuses, z_threshold);
}

namespace {

// Statistics in (i, j >= i) order over the role list; i == j is the
// self-repetition index of role i.
std::vector<double> role_statistics(const DirectedGraph& g, std::span<const MotifClass> classes,
                                    std::span<const RoleKey> roles) {
  const RoleAssignment ra = role_assignment(g, classes);
  std::vector<std::vector<NodeIndex>> members;
  members.reserve(roles.size());
  for (const RoleKey& r : roles) members.push_back(ra.members(r));
  std::vector<double> values;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    for (std::size_t j = i; j < roles.size(); ++j) {
      if (i == j) {
        values.push_back(self_role_repetition(ra.roles.at(roles[i])));
      } else {
        values.push_back(jaccard(members[i], members[j]));
      }
    }
  }
  return values;
}

}  // namespace

DetectResult detect(const DirectedGraph& g, const DetectConfig& cfg) {
  cfg.null_model.validate();
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  DetectResult result;
  result.census = triad_census(g);

  NullModelConfig motif_cfg = cfg.null_model;
  motif_cfg.rng_seed = stream_seed(cfg.null_model.rng_seed, "motif-null");
  for (const MotifScore& s : score_motifs(g, motif_cfg, cfg.jobs, cfg.motif_z_threshold)) {
    if (s.significant) result.motifs.push_back(s);
  }
  if (result.motifs.empty()) return result;

  std::vector<MotifClass> classes;
  std::vector<RoleKey> roles;
  for (const MotifScore& s : result.motifs) {
    classes.push_back(s.motif);
    for (const RoleOrbit& o : role_orbits(s.motif)) {
      result.roles.push_back(o);
      roles.push_back(RoleKey{o.motif, o.orbit});
    }
  }

  const std::vector<double> real = role_statistics(g, classes, roles);

  NullModelConfig census_cfg = cfg.null_model;
  census_cfg.rng_seed = stream_seed(cfg.null_model.rng_seed, "census-null");
  std::vector<EnsembleMember> members = generate_ensemble(g, census_cfg, cfg.jobs);
  std::vector<std::vector<double>> sampled(members.size());
  detail::run_parallel(members.size(), cfg.jobs, [&](std::size_t m) {
    sampled[m] = role_statistics(members[m].graph, classes, roles);
  });
  for (EnsembleMember& m : members) {
    result.residuals.push_back(m.residual);
    if (cfg.keep_ensemble) result.ensemble.push_back(std::move(m.graph));
  }

  std::size_t k = 0;
  std::vector<double> column(members.size());
  for (std::size_t i = 0; i < roles.size(); ++i) {
    for (std::size_t j = i; j < roles.size(); ++j, ++k) {
      for (std::size_t m = 0; m < members.size(); ++m) column[m] = sampled[m][k];
      const Enrichment e = enrichment(real[k], column);
      CombinationStat s;
      s.role_a = roles[i];
      s.role_b = roles[j];
      s.j_real = real[k];
      s.mean = e.mean;
      s.stddev = e.stddev;
      s.z = e.z;
      s.p = e.p;
      s.tested = !e.degenerate;
      result.stats.push_back(s);
    }
  }

  std::vector<double> family;
  for (const CombinationStat& s : result.stats) {
    if (s.tested) family.push_back(s.p);
  }
  const std::vector<double> q = bh_correct(family);
  std::size_t t = 0;
  for (CombinationStat& s : result.stats) {
    if (!s.tested) continue;
    s.q = q[t++];
    if (s.q < cfg.alpha) s.direction = s.z > 0 ? Direction::kOver : Direction::kUnder;
  }
  std::stable_sort(result.stats.begin(), result.stats.end(),
                   [](const CombinationStat& a, const CombinationStat& b) {
                     return std::tie(a.q, a.role_a, a.role_b) < std::tie(b.q, b.role_a, b.role_b);
                   });
  return result;
}

}  // namespace hypermotif
