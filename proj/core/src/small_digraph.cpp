#include "hypermotif/small_digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hypermotif {

int Pattern::edge_count() const { return std::popcount(adj); }

Pattern Pattern::permuted(std::span<const int> perm) const {
  Pattern out;
  out.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (has(i, j)) out.set(perm[i], perm[j], negative(i, j));
    }
  }
  return out;
}

Pattern Pattern::induced(std::span<const int> nodes) const {
  Pattern out;
  out.n = static_cast<int>(nodes.size());
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) {
      if (has(nodes[i], nodes[j])) out.set(i, j, negative(nodes[i], nodes[j]));
    }
  }
  return out;
}

Pattern Pattern::off_diagonal() const {
  Pattern out = *this;
  for (int i = 0; i < n; ++i) {
    out.adj &= ~bit(i, i);
    out.neg &= ~bit(i, i);
  }
  return out;
}

bool Pattern::connected() const {
  if (n <= 1) return true;
  unsigned seen = 1U;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < n; ++i) {
      if (!(seen & (1U << i))) continue;
      for (int j = 0; j < n; ++j) {
        if ((seen & (1U << j)) || !(has(i, j) || has(j, i))) continue;
        seen |= 1U << j;
        grew = true;
      }
    }
  }
  return seen == (1U << n) - 1;
}

CanonicalForm canonical_form(const Pattern& p, std::span<const int> colors) {
  if (p.n > Pattern::kMaxNodes) throw std::invalid_argument("pattern too large");
  if (!colors.empty() && static_cast<int>(colors.size()) != p.n) {
    throw std::invalid_argument("canonical_form: one color per node expected");
  }
  std::vector<int> color(colors.begin(), colors.end());
  if (color.empty()) color.assign(static_cast<std::size_t>(p.n), 0);

  // order[k] is the node placed at new index k. Only orders that list the
  // colors in ascending order are color-preserving relabelings.
  std::vector<int> order(static_cast<std::size_t>(p.n));
  std::iota(order.begin(), order.end(), 0);
  CanonicalForm best;
  best.colors = color;
  std::sort(best.colors.begin(), best.colors.end());
  bool first = true;
  std::vector<int> perm(static_cast<std::size_t>(p.n));
  do {
    bool sorted = true;
    for (int k = 0; k < p.n && sorted; ++k) sorted = color[order[k]] == best.colors[k];
    if (!sorted) continue;
    for (int k = 0; k < p.n; ++k) perm[order[k]] = k;
    const Pattern q = p.permuted(perm);
    if (first || std::tie(q.adj, q.neg) < std::tie(best.adj, best.neg)) {
      best.adj = q.adj;
      best.neg = q.neg;
      first = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<std::vector<int>> automorphisms(const Pattern& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (p.permuted(perm) == p) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace hypermotif
