#include "hypermotif/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hypermotif {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

bool has(TriadPattern p, int from, int to) { return (p >> triad_bit(from, to)) & 1U; }

TriadPattern permute(TriadPattern p, const std::array<int, 3>& perm) {
  TriadPattern out = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && has(p, i, j)) out |= static_cast<TriadPattern>(1U << triad_bit(perm[i], perm[j]));
    }
  }
  return out;
}

bool pattern_connected(TriadPattern p) {
  int linked_pairs = 0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    if (has(p, i, j) || has(p, j, i)) ++linked_pairs;
  }
  return linked_pairs >= 2;
}

std::string holland_leinhardt_name(TriadPattern p) {
  int mutual = 0, asym = 0;
  int out_deg[3] = {0, 0, 0}, in_deg[3] = {0, 0, 0};
  std::pair<int, int> mutual_pair{-1, -1};
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const bool ij = has(p, i, j), ji = has(p, j, i);
    if (ij && ji) {
      ++mutual;
      mutual_pair = {i, j};
    } else if (ij || ji) {
      ++asym;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && has(p, i, j)) {
        ++out_deg[i];
        ++in_deg[j];
      }
    }
  }
  std::string name = std::to_string(mutual) + std::to_string(asym) +
                     std::to_string(3 - mutual - asym);
  if (name == "021") {
    for (int i = 0; i < 3; ++i) {
      if (out_deg[i] == 2) return name + "D";
      if (in_deg[i] == 2) return name + "U";
    }
    return name + "C";
  }
  if (name == "030") {
    for (int i = 0; i < 3; ++i) {
      if (out_deg[i] != 1) return name + "T";
    }
    return name + "C";
  }
  if (name == "111" || name == "120") {
    const auto [a, b] = mutual_pair;
    const int third = 3 - a - b;
    const bool third_sends_a = has(p, third, a), third_sends_b = has(p, third, b);
    const bool third_gets_a = has(p, a, third), third_gets_b = has(p, b, third);
    if (name == "111") return name + ((third_gets_a || third_gets_b) ? "U" : "D");
    if (third_sends_a && third_sends_b) return name + "D";
    if (third_gets_a && third_gets_b) return name + "U";
    return name + "C";
  }
  return name;
}

struct Tables {
  std::array<TriadPattern, kTriadPatternCount> canonical{};
  std::array<std::array<int, 3>, kTriadPatternCount> to_canonical{};  // position -> canonical position
  std::array<int, 256> class_index_by_code{};
  std::array<MotifClass, kTriadClassCount> classes{};
  std::array<std::array<int, 3>, kTriadPatternCount> orbit_by_canonical_position{};
  std::array<std::string, kTriadClassCount> names{};

  Tables() {
    class_index_by_code.fill(-1);
    std::vector<TriadPattern> codes;
    for (int p = 0; p < kTriadPatternCount; ++p) {
      TriadPattern best = 0xFF;
      for (const auto& perm : kPermutations) {
        const TriadPattern q = permute(static_cast<TriadPattern>(p), perm);
        if (q < best) {
          best = q;
          to_canonical[p] = perm;
        }
      }
      canonical[p] = best;
      codes.push_back(best);
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    if (codes.size() != kTriadClassCount) throw std::logic_error("triad class table");
    for (std::size_t i = 0; i < codes.size(); ++i) {
      class_index_by_code[codes[i]] = static_cast<int>(i);
      classes[i] = MotifClass{3, codes[i], pattern_connected(codes[i])};
      names[i] = holland_leinhardt_name(codes[i]);
    }
    // Orbits of canonical positions under the automorphism group.
    for (TriadPattern code : codes) {
      std::array<int, 3> parent = {0, 1, 2};
      auto root = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      for (const auto& perm : kPermutations) {
        if (permute(code, perm) != code) continue;
        for (int i = 0; i < 3; ++i) {
          const int a = root(i), b = root(perm[i]);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::array<int, 3> orbit{};
      int next = 0;
      std::array<int, 3> id_of_root = {-1, -1, -1};
      for (int i = 0; i < 3; ++i) {
        const int r = root(i);
        if (id_of_root[r] < 0) id_of_root[r] = next++;
        orbit[i] = id_of_root[r];
      }
      orbit_by_canonical_position[code] = orbit;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

TriadPattern permute_pattern(TriadPattern pattern, const std::array<int, 3>& perm) {
  return permute(pattern, perm);
}

MotifClass canonical_class(TriadPattern pattern) {
  const auto& t = tables();
  return t.classes[t.class_index_by_code[t.canonical[pattern & 0x3F]]];
}

const std::array<MotifClass, kTriadClassCount>& triad_classes() { return tables().classes; }

int triad_class_index(const MotifClass& c) {
  if (c.size != 3) throw std::invalid_argument("not a triad class");
  const int idx = tables().class_index_by_code[c.code];
  if (idx < 0) throw std::invalid_argument("not a canonical triad code");
  return idx;
}

int triad_class_index_of_pattern(TriadPattern pattern) {
  const auto& t = tables();
  return t.class_index_by_code[t.canonical[pattern & 0x3F]];
}

std::string MotifClass::name() const {
  if (is_self_loop()) return "SL";
  return tables().names[triad_class_index(*this)];
}

std::string MotifClass::alias() const {
  const std::string n = name();
  if (n == "030T") return "FFL";
  if (n == "030C") return "LOOP3";
  return n;
}

MotifClass motif_class_from_name(const std::string& name) {
  if (name == "SL") return MotifClass::self_loop();
  for (const MotifClass& c : triad_classes()) {
    if (c.name() == name || c.alias() == name) return c;
  }
  throw std::invalid_argument("unknown motif class: " + name);
}

TriadPattern triad_pattern(const DirectedGraph& g, NodeIndex p0, NodeIndex p1, NodeIndex p2) {
  const NodeIndex nodes[3] = {p0, p1, p2};
  TriadPattern p = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && g.has_edge(nodes[i], nodes[j])) {
        p |= static_cast<TriadPattern>(1U << triad_bit(i, j));
      }
    }
  }
  return p;
}

std::uint64_t Census::count(const MotifClass& c) const {
  if (c.is_self_loop()) return self_loops;
  return triads[static_cast<std::size_t>(triad_class_index(c))];
}

std::uint64_t Census::connected_total() const {
  std::uint64_t total = 0;
  for (int i = 0; i < kTriadClassCount; ++i) {
    if (triad_classes()[i].connected) total += triads[i];
  }
  return total;
}

std::uint64_t census_distance(const Census& a, const Census& b) {
  auto diff = [](std::uint64_t x, std::uint64_t y) { return x > y ? x - y : y - x; };
  std::uint64_t d = diff(a.self_loops, b.self_loops);
  for (int i = 0; i < kTriadClassCount; ++i) d += diff(a.triads[i], b.triads[i]);
  return d;
}

namespace {

std::uint64_t choose3(std::uint64_t n) {
  return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

// Calls visit(v, u, w) once for every unordered triple whose induced subgraph
// is connected, and dyadic(v, u, count) once per adjacent pair for the
// `count` triples in which that pair is the only linked one.
template <typename Visit, typename Dyadic>
void for_each_linked_triple(const DirectedGraph& g, Visit&& visit, Dyadic&& dyadic) {
  const std::size_t n = g.node_count();
  std::vector<std::uint8_t> adjacent_to_v(n, 0);
  std::vector<NodeIndex> merged;
  for (NodeIndex v = 0; v < n; ++v) {
    const auto nv = g.neighbors(v);
    for (NodeIndex x : nv) adjacent_to_v[x] = 1;
    for (NodeIndex u : nv) {
      if (u <= v) continue;
      const auto nu = g.neighbors(u);
      merged.clear();
      std::set_union(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(merged));
      std::size_t s_size = 0;
      for (NodeIndex w : merged) {
        if (w == u || w == v) continue;
        ++s_size;
        if (u < w || (v < w && w < u && !adjacent_to_v[w])) visit(v, u, w);
      }
      dyadic(v, u, n - s_size - 2);
    }
    for (NodeIndex x : nv) adjacent_to_v[x] = 0;
  }
}

}  // namespace

Census triad_census(const DirectedGraph& g) {
  Census c;
  c.self_loops = g.self_loop_count();
  std::uint64_t visited = 0;
  for_each_linked_triple(
      g,
      [&](NodeIndex v, NodeIndex u, NodeIndex w) {
        ++c.triads[triad_class_index_of_pattern(triad_pattern(g, v, u, w))];
        ++visited;
      },
      [&](NodeIndex v, NodeIndex u, std::size_t count) {
        TriadPattern p = 0;
        if (g.has_edge(v, u)) p |= 1U << triad_bit(0, 1);
        if (g.has_edge(u, v)) p |= 1U << triad_bit(1, 0);
        c.triads[triad_class_index_of_pattern(p)] += count;
        visited += count;
      });
  c.triads[triad_class_index_of_pattern(0)] = choose3(g.node_count()) - visited;
  return c;
}

Census triad_census_brute_force(const DirectedGraph& g) {
  Census c;
  c.self_loops = g.self_loop_count();
  const auto n = static_cast<NodeIndex>(g.node_count());
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) {
      for (NodeIndex d = b + 1; d < n; ++d) {
        ++c.triads[triad_class_index_of_pattern(triad_pattern(g, a, b, d))];
      }
    }
  }
  return c;
}

std::vector<MotifScore> motif_scores(const Census& real, std::span<const Census> ensemble,
                                     double z_threshold) {
  if (ensemble.empty()) throw std::invalid_argument("find_motifs: empty ensemble");
  std::vector<MotifClass> tested;
  for (const MotifClass& c : triad_classes()) {
    if (c.connected) tested.push_back(c);
  }
  tested.push_back(MotifClass::self_loop());

  std::vector<MotifScore> scores;
  const double m = static_cast<double>(ensemble.size());
  for (const MotifClass& c : tested) {
    MotifScore s;
    s.motif = c;
    s.real = static_cast<double>(real.count(c));
    double sum = 0.0;
    for (const Census& e : ensemble) sum += static_cast<double>(e.count(c));
    s.mean = sum / m;
    double ss = 0.0;
    for (const Census& e : ensemble) {
      const double d = static_cast<double>(e.count(c)) - s.mean;
      ss += d * d;
    }
    s.stddev = ensemble.size() > 1 ? std::sqrt(ss / (m - 1.0)) : 0.0;
    if (s.stddev > 0.0) {
      s.z = (s.real - s.mean) / s.stddev;
      s.significant = s.z > z_threshold;
    } else if (s.real != s.mean) {
      s.infinite_z = true;
      s.z = s.real > s.mean ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
      s.significant = s.real > s.mean;
    }
    scores.push_back(s);
  }
  return scores;
}

std::vector<MotifScore> find_motifs(const Census& real, std::span<const Census> ensemble,
                                    double z_threshold) {
  std::vector<MotifScore> motifs = motif_scores(real, ensemble, z_threshold);
  std::erase_if(motifs, [](const MotifScore& s) { return !s.significant; });
  return motifs;
}

std::vector<MotifScore> find_motifs(const DirectedGraph& g,
                                    std::span<const DirectedGraph> ensemble,
                                    double z_threshold) {
  std::vector<Census> censuses;
  censuses.reserve(ensemble.size());
  for (const DirectedGraph& e : ensemble) censuses.push_back(triad_census(e));
  return find_motifs(triad_census(g), censuses, z_threshold);
}

std::vector<RoleOrbit> role_orbits(const MotifClass& c) {
  if (c.is_self_loop()) return {RoleOrbit{c, 0, {0}}};
  if (!c.connected) throw std::invalid_argument("role_orbits: disconnected triad class");
  const auto& orbit = tables().orbit_by_canonical_position[c.code];
  std::vector<RoleOrbit> out;
  for (int pos = 0; pos < 3; ++pos) {
    const int o = orbit[pos];
    if (o == static_cast<int>(out.size())) out.push_back(RoleOrbit{c, o, {}});
    out[static_cast<std::size_t>(o)].positions.push_back(pos);
  }
  return out;
}

int orbit_of_position(TriadPattern pattern, int pos) {
  const auto& t = tables();
  const int canonical_pos = t.to_canonical[pattern & 0x3F][pos];
  return t.orbit_by_canonical_position[t.canonical[pattern & 0x3F]][canonical_pos];
}

std::string RoleOrbit::label() const {
  return motif.alias() + "[" + std::to_string(orbit) + "]";
}

std::pair<int, int> RoleOrbit::degree_signature() const {
  if (motif.is_self_loop()) return {1, 1};
  const int pos = positions.front();
  int out = 0, in = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == pos) continue;
    out += has(motif.code, pos, j);
    in += has(motif.code, j, pos);
  }
  return {out, in};
}

std::vector<NodeIndex> RoleAssignment::members(const RoleKey& key) const {
  std::vector<NodeIndex> out;
  auto it = roles.find(key);
  if (it == roles.end()) return out;
  out.reserve(it->second.size());
  for (const auto& [node, count] : it->second) out.push_back(node);
  return out;
}

std::vector<NodeIndex> RoleAssignment::participating_nodes() const {
  std::vector<NodeIndex> all;
  for (const auto& [key, nodes] : roles) {
    for (const auto& [node, count] : nodes) all.push_back(node);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

RoleAssignment role_assignment(const DirectedGraph& g, std::span<const MotifClass> classes) {
  RoleAssignment ra;
  std::array<bool, kTriadClassCount> wanted{};
  bool want_self_loop = false;
  for (const MotifClass& c : classes) {
    for (const RoleOrbit& o : role_orbits(c)) ra.roles[RoleKey{c, o.orbit}];
    if (c.is_self_loop()) {
      want_self_loop = true;
    } else {
      wanted[static_cast<std::size_t>(triad_class_index(c))] = true;
    }
  }
  if (want_self_loop) {
    auto& sl = ra.roles[RoleKey{MotifClass::self_loop(), 0}];
    for (const Edge& e : g.edges()) {
      if (e.is_self_loop()) ++sl[e.src];
    }
  }
  for_each_linked_triple(
      g,
      [&](NodeIndex v, NodeIndex u, NodeIndex w) {
        const TriadPattern p = triad_pattern(g, v, u, w);
        const int idx = triad_class_index_of_pattern(p);
        if (!wanted[static_cast<std::size_t>(idx)]) return;
        const MotifClass& c = triad_classes()[static_cast<std::size_t>(idx)];
        const NodeIndex nodes[3] = {v, u, w};
        for (int pos = 0; pos < 3; ++pos) {
          ++ra.roles[RoleKey{c, orbit_of_position(p, pos)}][nodes[pos]];
        }
      },
      [](NodeIndex, NodeIndex, std::size_t) {});
  return ra;
}

}  // namespace hypermotif
