#include "hypermotif/downsample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypermotif/detect.hpp"

namespace hypermotif {

void DownsampleConfig::validate() const {
  if (sz < 3) throw std::invalid_argument("sz must be >= 3");
  if (!(walk_probability > 0.0 && walk_probability < 1.0)) {
    throw std::invalid_argument("walk_probability must lie in (0, 1)");
  }
  if (max_anchor_draws == 0) throw std::invalid_argument("max_anchor_draws must be >= 1");
}

namespace {

class Sampler {
 public:
  Sampler(const DirectedGraph& g, const DownsampleConfig& cfg)
      : g_(g), cfg_(cfg), rng_(cfg.rng_seed), seen_(g.node_count(), false) {}

  DownsampleResult run() {
    const std::size_t third = cfg_.sz / 3;
    const std::size_t two_thirds = 2 * cfg_.sz / 3;
    anchor_ = draw_anchor();
    push(anchor_);
    push(random_neighbor(anchor_));
    extend_to(third);
    restart_below(static_cast<double>(third) / 2.0, third);
    extend_to(out_.sequence.size() - 1 + (two_thirds - third));
    restart_below(static_cast<double>(third), two_thirds - third);
    extend_to(out_.sequence.size() - 1 + (cfg_.sz - two_thirds));
    if (static_cast<double>(out_.nodes.size()) < static_cast<double>(third)) {
      out_.warnings.push_back("sample has " + std::to_string(out_.nodes.size()) +
                              " unique nodes, fewer than sz/3 = " + std::to_string(third));
    }
    out_.graph = g_.induced_subgraph(out_.nodes);
    return std::move(out_);
  }

 private:
  std::size_t degree(NodeIndex v) const {
    return g_.neighbors(v).size() + (g_.has_self_loop(v) ? 1 : 0);
  }

  NodeIndex random_neighbor(NodeIndex v) {
    const auto nbrs = g_.neighbors(v);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, degree(v) - 1)(rng_);
    return k < nbrs.size() ? nbrs[k] : v;
  }

  bool can_draw() const { return out_.anchor_draws < cfg_.max_anchor_draws; }

  NodeIndex draw_anchor() {
    std::uniform_int_distribution<NodeIndex> pick(0, static_cast<NodeIndex>(g_.node_count() - 1));
    while (can_draw()) {
      ++out_.anchor_draws;
      const NodeIndex v = pick(rng_);
      if (degree(v) > 0) return v;
    }
    throw DownsampleError("no non-isolated start node after " +
                          std::to_string(cfg_.max_anchor_draws) + " draws");
  }

  void push(NodeIndex v) {
    out_.sequence.push_back(v);
    if (!seen_[v]) {
      seen_[v] = true;
      out_.nodes.push_back(v);
    }
  }

  // Appends entries until the last index of the list is `last`.
  void extend_to(std::size_t last) {
    std::bernoulli_distribution walk(cfg_.walk_probability);
    while (out_.sequence.size() <= last) {
      const NodeIndex from = walk(rng_) ? out_.sequence.back() : anchor_;
      push(random_neighbor(from));
    }
  }

  void restart_below(double threshold, std::size_t segment) {
    while (static_cast<double>(out_.nodes.size()) < threshold) {
      if (!can_draw()) {
        out_.warnings.push_back("anchor draw budget exhausted with " +
                                std::to_string(out_.nodes.size()) + " unique nodes");
        return;
      }
      anchor_ = draw_anchor();
      push(anchor_);
      extend_to(out_.sequence.size() - 1 + segment);
    }
  }

  const DirectedGraph& g_;
  const DownsampleConfig& cfg_;
  Rng rng_;
  std::vector<bool> seen_;
  NodeIndex anchor_ = 0;
  DownsampleResult out_;
};

std::vector<double> total_degrees(const DirectedGraph& g) {
  std::vector<double> d(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    d[v] = static_cast<double>(g.in_degree(v) + g.out_degree(v));
  }
  return d;
}

std::vector<MotifClass> significant_classes(const DirectedGraph& g, const NullModelConfig& cfg,
                                            std::size_t jobs) {
  std::vector<MotifClass> out;
  for (const MotifScore& s : score_motifs(g, cfg, jobs)) {
    if (s.significant) out.push_back(s.motif);
  }
  return out;
}

}  // namespace

DownsampleResult downsample(const DirectedGraph& g, const DownsampleConfig& cfg) {
  cfg.validate();
  if (g.node_count() == 0) throw DownsampleError("cannot sample an empty graph");
  return Sampler(g, cfg).run();
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

DownsampleReport validate_downsample(const DirectedGraph& g, const DirectedGraph& gd,
                                     const NullModelConfig& motif_cfg, std::size_t jobs) {
  if (gd.node_count() == 0) throw std::invalid_argument("sample graph is empty");
  std::vector<NodeIndex> map(gd.node_count());
  for (NodeIndex v = 0; v < gd.node_count(); ++v) {
    const auto found = g.find(gd.name(v));
    if (!found) throw std::invalid_argument("sample node '" + gd.name(v) + "' not in graph");
    map[v] = *found;
  }
  if (g.induced_subgraph(map) != gd) {
    throw std::invalid_argument("sample is not an induced subgraph of the graph");
  }
  DownsampleReport r;
  r.ks_distance = ks_distance(total_degrees(g), total_degrees(gd));
  r.motifs_full = significant_classes(g, motif_cfg, jobs);
  r.motifs_sample = significant_classes(gd, motif_cfg, jobs);
  r.same_motifs = r.motifs_full == r.motifs_sample;
  return r;
}

}  // namespace hypermotif
