#include "census_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hypermotif::testkit {

int encode(const Adj3& a) {
  int code = 0, bit = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (a[i][j]) code |= 1 << bit;
      ++bit;
    }
  }
  return code;
}

Adj3 decode(int code) {
  Adj3 a{};
  int bit = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      a[i][j] = (code >> bit++) & 1;
    }
  }
  return a;
}

int oracle_canonical(int code) {
  Adj3 a = decode(code);
  std::array<int, 3> p{0, 1, 2};
  int best = 64;
  do {
    Adj3 b{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[p[i]][p[j]] = a[i][j];
    best = std::min(best, encode(b));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

namespace {

std::map<int, int> oracle_class_index() {
  std::set<int> codes;
  for (int c = 0; c < 64; ++c) codes.insert(oracle_canonical(c));
  std::map<int, int> index;
  for (int c : codes) index.emplace(c, static_cast<int>(index.size()));
  return index;
}

}  // namespace

std::array<std::uint64_t, 16> oracle_census(const DirectedGraph& g) {
  static const auto index = oracle_class_index();
  std::array<std::uint64_t, 16> counts{};
  const auto n = static_cast<NodeIndex>(g.node_count());
  for (NodeIndex a = 0; a < n; ++a)
    for (NodeIndex b = a + 1; b < n; ++b)
      for (NodeIndex c = b + 1; c < n; ++c) {
        const NodeIndex v[3] = {a, b, c};
        Adj3 m{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m[i][j] = i != j && g.has_edge(v[i], v[j]);
        ++counts[index.at(oracle_canonical(encode(m)))];
      }
  return counts;
}

}  // namespace hypermotif::testkit
