#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hypermotif {

/// Labeled digraph on at most 8 nodes with optional self-loops and a sign per
/// edge. Bit (8 * i + j) of `adj` is the edge i -> j; the same bit of `neg`
/// marks it as inhibitory.
struct Pattern {
  static constexpr int kMaxNodes = 8;

  int n = 0;
  std::uint64_t adj = 0;
  std::uint64_t neg = 0;

  static constexpr std::uint64_t bit(int i, int j) { return 1ULL << (8 * i + j); }

  bool has(int i, int j) const { return (adj & bit(i, j)) != 0; }
  bool negative(int i, int j) const { return (neg & bit(i, j)) != 0; }
  void set(int i, int j, bool inhibitory = false) {
    adj |= bit(i, j);
    if (inhibitory) {
      neg |= bit(i, j);
    } else {
      neg &= ~bit(i, j);
    }
  }
  int edge_count() const;

  /// Node v of this pattern becomes node perm[v].
  Pattern permuted(std::span<const int> perm) const;
  /// Pattern induced on `nodes` (in that order), diagonal included.
  Pattern induced(std::span<const int> nodes) const;
  /// Same without self-loops.
  Pattern off_diagonal() const;
  /// True when the underlying undirected graph is connected.
  bool connected() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Canonical form under color-preserving relabelings: node colors are sorted
/// ascending and the lexicographically smallest (adj, neg) is kept.
struct CanonicalForm {
  std::vector<int> colors;
  std::uint64_t adj = 0;
  std::uint64_t neg = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// `colors` may be empty (all nodes alike). Brute force over n! relabelings.
CanonicalForm canonical_form(const Pattern& p, std::span<const int> colors = {});

/// All permutations perm with p.permuted(perm) == p.
std::vector<std::vector<int>> automorphisms(const Pattern& p);

}  // namespace hypermotif
