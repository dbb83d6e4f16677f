#include "hypermotif/null_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "parallel.hpp"

namespace hypermotif {

namespace {

constexpr std::uint64_t kEmpty = ~0ULL;

std::uint8_t bit(int from, int to) { return static_cast<std::uint8_t>(1U << triad_bit(from, to)); }

}  // namespace

void NullModelConfig::validate() const {
  if (ensemble_size < 2) throw std::invalid_argument("ensemble_size must be >= 2");
  if (!(swap_multiplier >= 0.0)) throw std::invalid_argument("swap_multiplier must be >= 0");
  if (!(anneal.cooling_factor > 0.0 && anneal.cooling_factor < 1.0)) {
    throw std::invalid_argument("cooling_factor must lie in (0, 1)");
  }
  if (!(anneal.initial_temperature > 0.0)) {
    throw std::invalid_argument("initial_temperature must be positive");
  }
}

RewiringState::RewiringState(const DirectedGraph& g, bool swap_self_loops)
    : names_(g.names()), out_(g.node_count()), in_(g.node_count()) {
  const std::size_t capacity = std::bit_ceil(std::max<std::size_t>(16, 4 * g.edge_count()));
  table_.assign(capacity, kEmpty);
  table_mask_ = capacity - 1;
  for (const Edge& e : g.edges()) {
    if (e.is_self_loop() && !swap_self_loops) {
      frozen_.push_back(e);
      table_insert(key(e.src, e.dst));
    } else {
      pool_.push_back(e);
      add_edge(e.src, e.dst, pool_.size() - 1);
    }
  }
  scratch_bits_.assign(g.node_count(), 0);
  mutual_pos_.assign(pool_.size(), -1);
  for (std::size_t i = 0; i < pool_.size(); ++i) refresh_mutual(i);
}

std::int64_t RewiringState::pool_index(NodeIndex u, NodeIndex v) const {
  if (u == v) return -1;
  for (const Adj& a : out_[u])
    if (a.node == v) return a.edge;
  return -1;
}

void RewiringState::refresh_mutual(std::size_t index) {
  const Edge e = pool_[index];
  const bool mutual = !e.is_self_loop() && has_edge(e.dst, e.src);
  auto& pos = mutual_pos_[index];
  if (mutual && pos < 0) {
    pos = static_cast<std::int32_t>(mutual_.size());
    mutual_.push_back(static_cast<std::uint32_t>(index));
  } else if (!mutual && pos >= 0) {
    const std::uint32_t last = mutual_.back();
    mutual_[static_cast<std::size_t>(pos)] = last;
    mutual_pos_[last] = pos;
    mutual_.pop_back();
    pos = -1;
  }
}

bool RewiringState::table_contains(std::uint64_t k) const {
  for (std::uint64_t i = splitmix64(k) & table_mask_;; i = (i + 1) & table_mask_) {
    if (table_[i] == k) return true;
    if (table_[i] == kEmpty) return false;
  }
}

void RewiringState::table_insert(std::uint64_t k) {
  std::uint64_t i = splitmix64(k) & table_mask_;
  while (table_[i] != kEmpty) {
    if (table_[i] == k) return;
    i = (i + 1) & table_mask_;
  }
  table_[i] = k;
}

void RewiringState::table_erase(std::uint64_t k) {
  std::uint64_t i = splitmix64(k) & table_mask_;
  while (table_[i] != k) {
    if (table_[i] == kEmpty) return;
    i = (i + 1) & table_mask_;
  }
  // Backward-shift deletion keeps probe chains intact without tombstones.
  std::uint64_t j = i;
  while (true) {
    j = (j + 1) & table_mask_;
    if (table_[j] == kEmpty) break;
    const std::uint64_t home = splitmix64(table_[j]) & table_mask_;
    const bool movable = (i <= j) ? (home <= i || home > j) : (home <= i && home > j);
    if (movable) {
      table_[i] = table_[j];
      i = j;
    }
  }
  table_[i] = kEmpty;
}

bool RewiringState::has_edge(NodeIndex u, NodeIndex v) const { return table_contains(key(u, v)); }

void RewiringState::add_edge(NodeIndex u, NodeIndex v, std::size_t pool_index) {
  table_insert(key(u, v));
  if (u == v) return;
  const auto idx = static_cast<std::uint32_t>(pool_index);
  out_[u].push_back({v, idx});
  in_[v].push_back({u, idx});
}

void RewiringState::remove_edge(NodeIndex u, NodeIndex v) {
  table_erase(key(u, v));
  if (u == v) return;
  auto drop = [](std::vector<Adj>& list, NodeIndex x) {
    auto it = std::find_if(list.begin(), list.end(), [x](const Adj& a) { return a.node == x; });
    *it = list.back();
    list.pop_back();
  };
  drop(out_[u], v);
  drop(in_[v], u);
}

bool RewiringState::propose(Rng& rng, Move& move) const {
  if (pool_.size() < 2) return false;
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  move.first = pick(rng);
  move.second = pick(rng);
  if (move.first == move.second) return false;
  const Edge e1 = pool_[move.first], e2 = pool_[move.second];
  move.a = e1.src;
  move.b = e1.dst;
  move.c = e2.src;
  move.d = e2.dst;
  return check(move);
}

bool RewiringState::check(Move& move) const {
  if (move.a == move.c || move.b == move.d) return false;
  if (move.a == move.d || move.c == move.b) return false;
  return !has_edge(move.a, move.d) && !has_edge(move.c, move.b);
}

bool RewiringState::propose_closing(Rng& rng, Move& move) const {
  if (pool_.size() < 2) return false;
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  return close_around(pool_[pick(rng)], rng, move);
}

bool RewiringState::propose_near_mutual(Rng& rng, Move& move) const {
  if (mutual_.empty()) return propose_closing(rng, move);
  std::uniform_int_distribution<std::size_t> pick(0, mutual_.size() - 1);
  return close_around(pool_[mutual_[pick(rng)]], rng, move);
}

bool RewiringState::close_around(Edge e, Rng& rng, Move& move) const {
  if (e.is_self_loop()) return false;
  const auto& out_y = out_[e.dst];
  const auto& in_y = in_[e.dst];
  const std::size_t around = out_y.size() + in_y.size();
  if (around == 0) return false;
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, around - 1)(rng);
  const NodeIndex z = k < out_y.size() ? out_y[k].node : in_y[k - out_y.size()].node;
  if (z == e.src) return false;
  const bool forward = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const NodeIndex from = forward ? e.src : z;
  const NodeIndex to = forward ? z : e.src;
  const auto& out_from = out_[from];
  const auto& in_to = in_[to];
  if (out_from.empty() || in_to.empty()) return false;
  const Adj ob = out_from[std::uniform_int_distribution<std::size_t>(0, out_from.size() - 1)(rng)];
  const Adj ic = in_to[std::uniform_int_distribution<std::size_t>(0, in_to.size() - 1)(rng)];
  if (ob.edge == ic.edge) return false;
  move.first = ob.edge;
  move.second = ic.edge;
  move.a = from;
  move.b = ob.node;
  move.c = ic.node;
  move.d = to;
  return check(move);
}

void RewiringState::apply(const Move& move) {
  remove_edge(move.a, move.b);
  remove_edge(move.c, move.d);
  add_edge(move.a, move.d, move.first);
  add_edge(move.c, move.b, move.second);
  pool_[move.first] = {move.a, move.d};
  pool_[move.second] = {move.c, move.b};
  refresh_mutual(move.first);
  refresh_mutual(move.second);
  for (const auto& [u, v] : {std::pair{move.b, move.a}, std::pair{move.d, move.c},
                             std::pair{move.d, move.a}, std::pair{move.b, move.c}}) {
    const std::int64_t i = pool_index(u, v);
    if (i >= 0) refresh_mutual(static_cast<std::size_t>(i));
  }
}

void RewiringState::add_pair_delta(NodeIndex x, NodeIndex y, TriadPattern before_xy,
                                   TriadPattern after_xy, NodeIndex a, NodeIndex b,
                                   NodeIndex c, NodeIndex d, TriadDelta& delta) const {
  // Triads {x, y, w} with w outside {a, b, c, d}: only the x-y dyad changes.
  auto touch = [&](NodeIndex w, std::uint8_t bits) {
    if (w == a || w == b || w == c || w == d) return;
    if (scratch_bits_[w] == 0) scratch_nodes_.push_back(w);
    scratch_bits_[w] |= bits;
  };
  scratch_nodes_.clear();
  for (const Adj& w : out_[x]) touch(w.node, bit(0, 2));
  for (const Adj& w : in_[x]) touch(w.node, bit(2, 0));
  for (const Adj& w : out_[y]) touch(w.node, bit(1, 2));
  for (const Adj& w : in_[y]) touch(w.node, bit(2, 1));
  for (NodeIndex w : scratch_nodes_) {
    const auto wb = static_cast<TriadPattern>(scratch_bits_[w]);
    --delta[static_cast<std::size_t>(triad_class_index_of_pattern(before_xy | wb))];
    ++delta[static_cast<std::size_t>(triad_class_index_of_pattern(after_xy | wb))];
    scratch_bits_[w] = 0;
  }
  const auto isolated = static_cast<std::int64_t>(names_.size()) - 4 -
                        static_cast<std::int64_t>(scratch_nodes_.size());
  delta[static_cast<std::size_t>(triad_class_index_of_pattern(before_xy))] -= isolated;
  delta[static_cast<std::size_t>(triad_class_index_of_pattern(after_xy))] += isolated;
}

TriadDelta RewiringState::census_delta(const Move& m) const {
  TriadDelta delta{};
  const NodeIndex a = m.a, b = m.b, c = m.c, d = m.d;
  auto edge_after = [&](NodeIndex u, NodeIndex v) {
    if ((u == a && v == b) || (u == c && v == d)) return false;
    if ((u == a && v == d) || (u == c && v == b)) return true;
    return has_edge(u, v);
  };
  auto pattern = [&](NodeIndex p0, NodeIndex p1, NodeIndex p2, bool after) {
    const NodeIndex nodes[3] = {p0, p1, p2};
    TriadPattern p = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const bool e = after ? edge_after(nodes[i], nodes[j]) : has_edge(nodes[i], nodes[j]);
        if (e) p |= bit(i, j);
      }
    }
    return p;
  };
  const NodeIndex inner[4][3] = {{a, b, c}, {a, b, d}, {a, c, d}, {b, c, d}};
  for (const auto& t : inner) {
    --delta[static_cast<std::size_t>(triad_class_index_of_pattern(pattern(t[0], t[1], t[2], false)))];
    ++delta[static_cast<std::size_t>(triad_class_index_of_pattern(pattern(t[0], t[1], t[2], true)))];
  }
  auto dyad = [&](NodeIndex x, NodeIndex y, bool after) {
    TriadPattern p = 0;
    if (after ? edge_after(x, y) : has_edge(x, y)) p |= bit(0, 1);
    if (after ? edge_after(y, x) : has_edge(y, x)) p |= bit(1, 0);
    return p;
  };
  const NodeIndex pairs[4][2] = {{a, b}, {c, d}, {a, d}, {c, b}};
  for (const auto& pr : pairs) {
    add_pair_delta(pr[0], pr[1], dyad(pr[0], pr[1], false), dyad(pr[0], pr[1], true), a, b, c,
                   d, delta);
  }
  return delta;
}

DirectedGraph RewiringState::to_graph() const { return to_graph(pool_); }

DirectedGraph RewiringState::to_graph(std::span<const Edge> pool) const {
  std::vector<Edge> edges(frozen_.begin(), frozen_.end());
  edges.insert(edges.end(), pool.begin(), pool.end());
  return DirectedGraph::from_edges(names_, edges);
}

DirectedGraph rewire_degree_preserving(const DirectedGraph& g, const NullModelConfig& cfg,
                                       Rng& rng, const RewireOptions& options) {
  RewiringState state(g, options.swap_self_loops);
  const auto attempts =
      static_cast<std::uint64_t>(cfg.swap_multiplier * static_cast<double>(state.pool_size()));
  RewiringState::Move move;
  for (std::uint64_t i = 0; i < attempts; ++i) {
    if (state.propose(rng, move)) state.apply(move);
  }
  return state.to_graph();
}

namespace {

struct AttemptOutcome {
  std::vector<Edge> best_pool;
  std::uint64_t best = 0;
  std::uint64_t iterations = 0;
};

AttemptOutcome anneal_attempt(const DirectedGraph& g_random, const Census& target,
                              const AnnealConfig& cfg, Rng& rng, AnnealResult& result,
                              std::uint64_t trace_offset) {
  RewiringState state(g_random);
  const Census start = triad_census(g_random);
  std::array<std::int64_t, kTriadClassCount> current{};
  for (int i = 0; i < kTriadClassCount; ++i) current[i] = static_cast<std::int64_t>(start.triads[i]);
  const std::uint64_t loop_gap = start.self_loops > target.self_loops
                                     ? start.self_loops - target.self_loops
                                     : target.self_loops - start.self_loops;

  auto objective_with = [&](const TriadDelta* delta) {
    std::uint64_t obj = loop_gap;
    for (int i = 0; i < kTriadClassCount; ++i) {
      const std::int64_t v = current[i] + (delta ? (*delta)[i] : 0);
      obj += static_cast<std::uint64_t>(std::llabs(v - static_cast<std::int64_t>(target.triads[i])));
    }
    return obj;
  };

  AttemptOutcome out;
  std::uint64_t objective = objective_with(nullptr);
  out.best = objective;
  out.best_pool = state.pool();

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double temperature = cfg.initial_temperature;
  RewiringState::Move move;
  std::uint64_t it = 0;
  for (; it < cfg.max_iterations && out.best > cfg.target_residual; ++it) {
    temperature *= cfg.cooling_factor;
    // Even steps: uniform swaps. Odd steps: closing moves, every other one
    // anchored on a mutual dyad, whose triad classes are rare.
    bool proposed_ok = false;
    switch (it & 3U) {
      case 1: proposed_ok = state.propose_closing(rng, move); break;
      case 3: proposed_ok = state.propose_near_mutual(rng, move); break;
      default: proposed_ok = state.propose(rng, move); break;
    }
    if (!proposed_ok) continue;
    const TriadDelta delta = state.census_delta(move);
    const std::uint64_t proposed = objective_with(&delta);
    bool accept = proposed <= objective;
    if (!accept) {
      const double rise = static_cast<double>(proposed - objective);
      accept = unit(rng) < std::exp(-rise / temperature);
    }
    if (!accept) continue;
    state.apply(move);
    for (int i = 0; i < kTriadClassCount; ++i) current[i] += delta[i];
    objective = proposed;
    ++result.accepted;
    if (objective < out.best) {
      out.best = objective;
      out.best_pool = state.pool();
      if (out.best < result.residual) {
        result.residual = out.best;
        result.best_trace.emplace_back(trace_offset + it + 1, out.best);
      }
    }
  }
  out.iterations = it;
  return out;
}

}  // namespace

AnnealResult anneal_to_census(const DirectedGraph& g_random, const Census& target,
                              const NullModelConfig& cfg, Rng& rng) {
  AnnealResult result;
  result.initial_residual = census_distance(triad_census(g_random), target);
  result.residual = result.initial_residual;
  result.best_trace.emplace_back(0, result.residual);
  std::vector<Edge> best_pool;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  RewiringState shell(g_random);
  for (std::uint32_t attempt = 0; attempt <= cfg.anneal.restarts; ++attempt) {
    AttemptOutcome out = anneal_attempt(g_random, target, cfg.anneal, rng, result,
                                        result.iterations);
    result.iterations += out.iterations;
    ++result.attempts;
    if (out.best < best) {
      best = out.best;
      best_pool = std::move(out.best_pool);
    }
    if (best <= cfg.anneal.target_residual) break;
  }
  result.residual = best;
  result.graph = shell.to_graph(best_pool);
  return result;
}

std::vector<EnsembleMember> generate_ensemble(const DirectedGraph& g, const NullModelConfig& cfg,
                                              std::size_t jobs) {
  cfg.validate();
  const Census target = triad_census(g);
  std::vector<EnsembleMember> members(cfg.ensemble_size);
  detail::run_parallel(cfg.ensemble_size, jobs, [&](std::size_t i) {
    const std::uint64_t seed = cfg.rng_seed + i;
    Rng rng(seed);
    const DirectedGraph mixed = rewire_degree_preserving(g, cfg, rng);
    AnnealResult annealed = anneal_to_census(mixed, target, cfg, rng);
    members[i] = EnsembleMember{std::move(annealed.graph), annealed.residual, seed};
  });
  return members;
}

std::vector<DirectedGraph> generate_degree_ensemble(const DirectedGraph& g,
                                                    const NullModelConfig& cfg,
                                                    const RewireOptions& options,
                                                    std::size_t jobs) {
  cfg.validate();
  std::vector<DirectedGraph> members(cfg.ensemble_size);
  detail::run_parallel(cfg.ensemble_size, jobs, [&](std::size_t i) {
    Rng rng(cfg.rng_seed + i);
    members[i] = rewire_degree_preserving(g, cfg, rng, options);
  });
  return members;
}

}  // namespace hypermotif
