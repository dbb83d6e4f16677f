#include "hypermotif/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hypermotif {

namespace {

Pattern triad_to_pattern(TriadPattern t) {
  Pattern p;
  p.n = 3;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && ((t >> triad_bit(i, j)) & 1U)) p.set(i, j);
    }
  }
  return p;
}

bool same_motif(const SmallMotif& a, const SmallMotif& b) {
  return a.pattern == b.pattern;
}

}  // namespace

SmallMotif small_motif(const MotifClass& c) {
  if (c.is_self_loop()) return small_motif("SL");
  if (!c.connected) throw std::invalid_argument("motif class must be connected");
  return SmallMotif{c.alias(), triad_to_pattern(c.code)};
}

SmallMotif small_motif(const std::string& name) {
  SmallMotif m;
  m.name = name;
  if (name == "SL") {
    m.pattern.n = 1;
    m.pattern.set(0, 0);
    return m;
  }
  if (name == "MUTUAL" || name == "DYAD" || name == "TOGGLE" || name == "LOCKON" ||
      name == "OSC") {
    m.pattern.n = 2;
    const bool toggle = name == "TOGGLE";
    m.pattern.set(0, 1, toggle || name == "OSC");  // OSC: X represses Y
    m.pattern.set(1, 0, toggle);                   // Y activates X
    if (name == "DYAD") m.name = "MUTUAL";
    return m;
  }
  if (name == "C1FFL" || name == "I1FFL") {
    m.pattern = triad_to_pattern(motif_class_from_name("FFL").code);
    if (name == "I1FFL") m.pattern.set(1, 2, true);
    return m;
  }
  return small_motif(motif_class_from_name(name));
}

int max_shared_nodes(int n_a, int n_b) {
  if (n_a < 1 || n_b < 1) throw std::invalid_argument("motif sizes must be >= 1");
  return std::min(n_a, n_b) - 1;
}

InteractionCount count_interaction_topologies(int n_a, int n_b, bool directed) {
  if (n_a < 1 || n_b < 1) throw std::invalid_argument("motif sizes must be >= 1");
  const unsigned exponent = static_cast<unsigned>((directed ? 2 : 1) * n_a * n_b);
  InteractionCount c;
  c.labeled = BigInt(1) << exponent;
  c.non_empty = c.labeled - 1;
  return c;
}

BigInt count_unique_interactions(const SmallMotif& a, const SmallMotif& b) {
  const int na = a.size();
  const int nb = b.size();
  const int n = na + nb;
  std::vector<std::vector<int>> group;
  for (const auto& pa : automorphisms(a.pattern)) {
    for (const auto& pb : automorphisms(b.pattern)) {
      std::vector<int> g(static_cast<std::size_t>(n));
      for (int i = 0; i < na; ++i) g[i] = pa[i];
      for (int j = 0; j < nb; ++j) g[na + j] = na + pb[j];
      group.push_back(g);
      if (same_motif(a, b)) {
        std::vector<int> swapped(static_cast<std::size_t>(n));
        for (int i = 0; i < na; ++i) swapped[i] = na + pa[i];
        for (int j = 0; j < nb; ++j) swapped[na + j] = pb[j];
        group.push_back(swapped);
      }
    }
  }
  // Linking pairs: (u in A, v in B) and (v in B, u in A).
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < na; ++u) {
    for (int v = na; v < n; ++v) {
      pairs.emplace_back(u, v);
      pairs.emplace_back(v, u);
    }
  }
  auto index_of = [&](std::pair<int, int> p) {
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), p) - pairs.begin());
  };
  BigInt sum = 0;
  for (const auto& g : group) {
    std::vector<bool> seen(pairs.size(), false);
    unsigned cycles = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (seen[k]) continue;
      ++cycles;
      for (std::size_t m = k; !seen[m];) {
        seen[m] = true;
        m = index_of({g[pairs[m].first], g[pairs[m].second]});
      }
    }
    sum += BigInt(1) << cycles;
  }
  return sum / group.size();
}

std::vector<Pattern> enumerate_unique_interactions(const SmallMotif& a, const SmallMotif& b) {
  const int na = a.size();
  const int nb = b.size();
  const int n = na + nb;
  if (2 * na * nb > 16) throw std::invalid_argument("too many linking pairs to enumerate");
  Pattern base;
  base.n = n;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      if (a.pattern.has(i, j)) base.set(i, j, a.pattern.negative(i, j));
    }
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (b.pattern.has(i, j)) base.set(na + i, na + j, b.pattern.negative(i, j));
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < na; ++u) {
    for (int v = na; v < n; ++v) {
      pairs.emplace_back(u, v);
      pairs.emplace_back(v, u);
    }
  }
  std::vector<int> colors(static_cast<std::size_t>(n), 1), swapped(static_cast<std::size_t>(n), 2);
  for (int v = na; v < n; ++v) {
    colors[static_cast<std::size_t>(v)] = 2;
    swapped[static_cast<std::size_t>(v)] = 1;
  }
  const bool same = same_motif(a, b);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<Pattern> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    Pattern p = base;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (1U << k)) p.set(pairs[k].first, pairs[k].second);
    }
    CanonicalForm c = canonical_form(p, colors);
    auto key = std::make_pair(c.adj, c.neg);
    if (same) {
      const CanonicalForm d = canonical_form(p, swapped);
      key = std::min(key, std::make_pair(d.adj, d.neg));
    }
    if (seen.insert(key).second) out.push_back(p);
  }
  return out;
}

std::vector<std::pair<int, int>> CombinationTopology::eligible_pairs() const {
  std::vector<bool> in_a(static_cast<std::size_t>(merged.n), false);
  std::vector<bool> in_b(static_cast<std::size_t>(merged.n), false);
  for (int v : a_nodes) in_a[v] = true;
  for (int v : b_nodes) in_b[v] = true;
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < merged.n; ++u) {
    for (int v = 0; v < merged.n; ++v) {
      if (u == v) continue;
      if ((in_a[u] && in_a[v]) || (in_b[u] && in_b[v])) continue;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::string CombinationTopology::label() const {
  std::string a = motif_a.name + "{";
  std::string b = motif_b.name + "{";
  for (std::size_t k = 0; k < sharing.size(); ++k) {
    if (k > 0) {
      a += ",";
      b += ",";
    }
    a += std::to_string(sharing[k].first);
    b += std::to_string(sharing[k].second);
  }
  return a + "}*" + b + "}";
}

namespace {

bool build_core(const SmallMotif& a, const SmallMotif& b,
                const std::vector<std::pair<int, int>>& sharing, CombinationTopology& out) {
  const int na = a.size();
  const int nb = b.size();
  out.motif_a = a;
  out.motif_b = b;
  out.sharing = sharing;
  out.a_nodes.resize(static_cast<std::size_t>(na));
  std::iota(out.a_nodes.begin(), out.a_nodes.end(), 0);
  out.b_nodes.assign(static_cast<std::size_t>(nb), -1);
  for (const auto& [i, j] : sharing) out.b_nodes[j] = i;
  int next = na;
  for (int j = 0; j < nb; ++j) {
    if (out.b_nodes[j] < 0) out.b_nodes[j] = next++;
  }
  Pattern m;
  m.n = next;
  if (m.n > Pattern::kMaxNodes) throw std::invalid_argument("combined motif too large");
  for (int i = 0; i < na; ++i) {
    for (int k = 0; k < na; ++k) {
      if (a.pattern.has(i, k)) m.set(i, k, a.pattern.negative(i, k));
    }
  }
  for (int j = 0; j < nb; ++j) {
    for (int k = 0; k < nb; ++k) {
      if (!b.pattern.has(j, k)) continue;
      const int u = out.b_nodes[j];
      const int v = out.b_nodes[k];
      if (m.has(u, v) && m.negative(u, v) != b.pattern.negative(j, k)) return false;
      m.set(u, v, b.pattern.negative(j, k));
    }
  }
  out.merged = m;
  return m.induced(out.a_nodes).off_diagonal() == a.pattern.off_diagonal() &&
         m.induced(out.b_nodes).off_diagonal() == b.pattern.off_diagonal();
}

}  // namespace

std::vector<CombinationTopology> enumerate_core_combinations(const SmallMotif& a,
                                                             const SmallMotif& b) {
  const int na = a.size();
  const int nb = b.size();
  int max_nv = max_shared_nodes(na, nb);
  if (std::min(na, nb) == 1 && std::max(na, nb) > 1) max_nv = 1;
  const bool same = same_motif(a, b);

  std::vector<CombinationTopology> out;
  std::set<CanonicalForm> seen;
  for (int nv = 1; nv <= max_nv; ++nv) {
    // Positions of A in increasing order, matched to an ordered choice of B.
    std::vector<int> choose_a(static_cast<std::size_t>(na), 0);
    std::fill(choose_a.end() - nv, choose_a.end(), 1);
    do {
      std::vector<int> a_pos;
      for (int i = 0; i < na; ++i) {
        if (choose_a[i]) a_pos.push_back(i);
      }
      std::vector<int> b_perm(static_cast<std::size_t>(nb));
      std::iota(b_perm.begin(), b_perm.end(), 0);
      std::set<std::vector<int>> used_b;
      do {
        std::vector<int> b_pos(b_perm.begin(), b_perm.begin() + nv);
        if (!used_b.insert(b_pos).second) continue;
        std::vector<std::pair<int, int>> sharing;
        for (int k = 0; k < nv; ++k) sharing.emplace_back(a_pos[k], b_pos[k]);
        CombinationTopology core;
        if (!build_core(a, b, sharing, core)) continue;
        std::vector<int> colors(static_cast<std::size_t>(core.merged.n), 0);
        for (int v : core.a_nodes) colors[v] += 1;
        for (int v : core.b_nodes) colors[v] += same ? 1 : 2;
        if (same) {
          for (int& c : colors) c = c == 2 ? 1 : 0;
        }
        if (seen.insert(canonical_form(core.merged, colors)).second) out.push_back(core);
      } while (std::next_permutation(b_perm.begin(), b_perm.end()));
    } while (std::next_permutation(choose_a.begin(), choose_a.end()));
  }
  return out;
}

std::vector<Pattern> enumerate_extensions(const CombinationTopology& core) {
  const auto eligible = core.eligible_pairs();
  if (eligible.size() > 20) throw std::invalid_argument("too many eligible pairs to enumerate");
  const std::size_t total = std::size_t{1} << eligible.size();
  std::vector<Pattern> out;
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Pattern p = core.merged;
    for (std::size_t k = 0; k < eligible.size(); ++k) {
      if (mask & (std::size_t{1} << k)) p.set(eligible[k].first, eligible[k].second);
    }
    out.push_back(p);
  }
  return out;
}

std::uint64_t ExtensionHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

// Calls visit(map) for every induced occurrence of `p` in g, where map[i] is
// the node at position i. Positions with fixed[i] >= 0 are pinned; nodes in
// `excluded` are never used for free positions. Self-loops only matter where
// the pattern has one.
void for_each_embedding(const DirectedGraph& g, const Pattern& p, const std::vector<long>& fixed,
                        const std::vector<NodeIndex>& excluded,
                        const std::function<void(const std::vector<NodeIndex>&)>& visit) {
  const int n = p.n;
  std::vector<NodeIndex> map(static_cast<std::size_t>(n), 0);
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);

  auto consistent = [&](int pos, NodeIndex v) {
    if (p.has(pos, pos) && !g.has_self_loop(v)) return false;
    for (int q = 0; q < n; ++q) {
      if (!assigned[q] || q == pos) continue;
      if (map[q] == v) return false;
      if (g.has_edge(v, map[q]) != p.has(pos, q)) return false;
      if (g.has_edge(map[q], v) != p.has(q, pos)) return false;
    }
    return true;
  };

  // Fixed positions first, then free positions each adjacent to an earlier one.
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    if (fixed[i] >= 0) order.push_back(i);
  }
  if (order.empty()) order.push_back(0);
  while (static_cast<int>(order.size()) < n) {
    bool added = false;
    for (int i = 0; i < n && !added; ++i) {
      if (std::find(order.begin(), order.end(), i) != order.end()) continue;
      for (int q : order) {
        if (p.has(i, q) || p.has(q, i)) {
          order.push_back(i);
          added = true;
          break;
        }
      }
    }
    if (!added) throw std::invalid_argument("motif pattern must be connected");
  }

  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == order.size()) {
      visit(map);
      return;
    }
    const int pos = order[k];
    auto attempt = [&](NodeIndex v) {
      if (fixed[pos] < 0 && std::find(excluded.begin(), excluded.end(), v) != excluded.end()) {
        return;
      }
      if (!consistent(pos, v)) return;
      map[pos] = v;
      assigned[pos] = true;
      step(k + 1);
      assigned[pos] = false;
    };
    if (fixed[pos] >= 0) {
      attempt(static_cast<NodeIndex>(fixed[pos]));
      return;
    }
    int anchor = -1;
    for (std::size_t m = 0; m < k; ++m) {
      if (p.has(pos, order[m]) || p.has(order[m], pos)) {
        anchor = order[m];
        break;
      }
    }
    if (anchor < 0) {
      for (NodeIndex v = 0; v < g.node_count(); ++v) attempt(v);
    } else {
      for (NodeIndex v : g.neighbors(map[anchor])) attempt(v);
    }
  };
  step(0);
}

}  // namespace

ExtensionHistogram count_extension_frequencies(const DirectedGraph& g,
                                               const CombinationTopology& core) {
  if (core.merged.n > 6) throw std::invalid_argument("core larger than 6 nodes");
  ExtensionHistogram h;
  h.eligible = core.eligible_pairs();
  h.counts.assign(std::size_t{1} << h.eligible.size(), 0);

  const int na = core.motif_a.size();
  const int nb = core.motif_b.size();
  std::map<std::vector<NodeIndex>, std::size_t> best;
  const std::vector<long> free_a(static_cast<std::size_t>(na), -1);
  for_each_embedding(g, core.motif_a.pattern, free_a, {}, [&](const std::vector<NodeIndex>& am) {
    std::vector<long> fixed_b(static_cast<std::size_t>(nb), -1);
    for (const auto& [i, j] : core.sharing) fixed_b[j] = am[i];
    for_each_embedding(
        g, core.motif_b.pattern, fixed_b, am, [&](const std::vector<NodeIndex>& bm) {
          std::vector<NodeIndex> nodes(static_cast<std::size_t>(core.merged.n));
          for (int i = 0; i < na; ++i) nodes[core.a_nodes[i]] = am[i];
          for (int j = 0; j < nb; ++j) nodes[core.b_nodes[j]] = bm[j];
          std::size_t bucket = 0;
          for (std::size_t k = 0; k < h.eligible.size(); ++k) {
            if (g.has_edge(nodes[h.eligible[k].first], nodes[h.eligible[k].second])) {
              bucket |= std::size_t{1} << k;
            }
          }
          std::sort(nodes.begin(), nodes.end());
          auto [it, inserted] = best.emplace(nodes, bucket);
          if (!inserted) it->second = std::min(it->second, bucket);
        });
  });
  for (const auto& [nodes, bucket] : best) ++h.counts[bucket];
  return h;
}

}  // namespace hypermotif
