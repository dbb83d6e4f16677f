#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hypermotif/graph.hpp"

namespace hypermotif {

/// Off-diagonal adjacency of an ordered node triple (p0, p1, p2).
/// Bit layout: 0:p0->p1 1:p0->p2 2:p1->p0 3:p1->p2 4:p2->p0 5:p2->p1.
using TriadPattern = std::uint8_t;

inline constexpr int kTriadPatternCount = 64;
inline constexpr int kTriadClassCount = 16;

constexpr int triad_bit(int from, int to) {
  constexpr int table[3][3] = {{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}};
  return table[from][to];
}

/// Isomorphism class of a motif of size 1 (the self-loop) or 3 (a triad).
/// For triads `code` is the canonical pattern: the minimum over all six
/// relabelings. For the self-loop `code` is 1.
struct MotifClass {
  int size = 3;
  std::uint8_t code = 0;
  bool connected = false;

  static MotifClass self_loop() { return {1, 1, true}; }
  bool is_self_loop() const { return size == 1; }

  /// Holland-Leinhardt label ("030T", "021C", ...) or "SL".
  std::string name() const;
  /// Short alias used in reports: "FFL" for 030T, "LOOP3" for 030C, else name().
  std::string alias() const;

  friend auto operator<=>(const MotifClass& a, const MotifClass& b) {
    if (auto c = a.size <=> b.size; c != 0) return c;
    return a.code <=> b.code;
  }
  friend bool operator==(const MotifClass& a, const MotifClass& b) {
    return a.size == b.size && a.code == b.code;
  }
};

MotifClass canonical_class(TriadPattern pattern);

/// Applies node relabeling `perm` (position i moves to perm[i]).
TriadPattern permute_pattern(TriadPattern pattern, const std::array<int, 3>& perm);

/// All 16 triad classes ordered by canonical code.
const std::array<MotifClass, kTriadClassCount>& triad_classes();

/// Dense index 0..15 of a triad class (by canonical code order).
int triad_class_index(const MotifClass& c);
int triad_class_index_of_pattern(TriadPattern pattern);

/// Looks up a class by Holland-Leinhardt label, "SL", "FFL" or "LOOP3".
/// Throws std::invalid_argument for unknown names.
MotifClass motif_class_from_name(const std::string& name);

TriadPattern triad_pattern(const DirectedGraph& g, NodeIndex p0, NodeIndex p1,
                           NodeIndex p2);

/// Induced-subgraph counts over unordered node triples (self-loops ignored),
/// plus the number of self-loops as the size-1 class.
struct Census {
  std::array<std::uint64_t, kTriadClassCount> triads{};
  std::uint64_t self_loops = 0;

  std::uint64_t count(const MotifClass& c) const;
  std::uint64_t connected_total() const;

  friend bool operator==(const Census&, const Census&) = default;
};

/// Sum of absolute per-class differences (self-loop count included).
std::uint64_t census_distance(const Census& a, const Census& b);

/// Visits every unordered triple spanning at least one edge exactly once, so
/// only connected and single-dyad triads are enumerated; empty triads are
/// filled in by subtraction.
Census triad_census(const DirectedGraph& g);

/// Exhaustive O(N^3) census over every node triple.
Census triad_census_brute_force(const DirectedGraph& g);

struct MotifScore {
  MotifClass motif;
  double real = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
  double z = 0.0;
  bool infinite_z = false;
  bool significant = false;
};

inline constexpr double kDefaultMotifZThreshold = 2.0;

/// Scores of every connected triad class and the self-loop class. A
/// zero-variance class gets z = +/-infinity (infinite_z) when real != mean and
/// z = 0 otherwise.
std::vector<MotifScore> motif_scores(const Census& real, std::span<const Census> ensemble,
                                     double z_threshold = kDefaultMotifZThreshold);

/// Connected triad classes and the self-loop class whose real count exceeds
/// the ensemble mean by more than `z_threshold` sample standard deviations.
/// A zero-variance class is reported with infinite_z when real > mean.
/// Throws std::invalid_argument on an empty ensemble.
std::vector<MotifScore> find_motifs(const Census& real, std::span<const Census> ensemble,
                                    double z_threshold = kDefaultMotifZThreshold);
std::vector<MotifScore> find_motifs(const DirectedGraph& g,
                                    std::span<const DirectedGraph> ensemble,
                                    double z_threshold = kDefaultMotifZThreshold);

/// Equivalence class of motif positions under the motif's automorphisms.
struct RoleOrbit {
  MotifClass motif;
  int orbit = 0;
  std::vector<int> positions;  // positions within the canonical pattern

  /// e.g. "FFL[0]" ; the FFL orbits 0,1,2 are input, intermediate, output.
  std::string label() const;
  /// Out/in degree of the orbit's positions inside the motif.
  std::pair<int, int> degree_signature() const;

  friend bool operator==(const RoleOrbit& a, const RoleOrbit& b) {
    return a.motif == b.motif && a.orbit == b.orbit;
  }
  friend auto operator<=>(const RoleOrbit& a, const RoleOrbit& b) {
    if (auto c = a.motif <=> b.motif; c != 0) return c;
    return a.orbit <=> b.orbit;
  }
};

/// Orbits in order of their smallest position. Throws std::invalid_argument
/// for disconnected triad classes.
std::vector<RoleOrbit> role_orbits(const MotifClass& c);

/// Orbit index of position `pos` of the (non-canonical) triad `pattern`.
int orbit_of_position(TriadPattern pattern, int pos);

struct RoleKey {
  MotifClass motif;
  int orbit = 0;
  friend auto operator<=>(const RoleKey&, const RoleKey&) = default;
  friend bool operator==(const RoleKey&, const RoleKey&) = default;
};

/// For each role of each requested class: which nodes fill it and how often.
struct RoleAssignment {
  std::map<RoleKey, std::map<NodeIndex, std::uint32_t>> roles;

  /// Sorted node set of a role (empty when the role never occurs).
  std::vector<NodeIndex> members(const RoleKey& key) const;
  /// Union of all role sets.
  std::vector<NodeIndex> participating_nodes() const;
};

RoleAssignment role_assignment(const DirectedGraph& g, std::span<const MotifClass> classes);

}  // namespace hypermotif
