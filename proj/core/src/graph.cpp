#include "hypermotif/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace hypermotif {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool reverse,
               std::vector<std::size_t>& offsets, std::vector<NodeIndex>& adj) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(reverse ? e.dst : e.src) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  adj.assign(edges.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    const NodeIndex from = reverse ? e.dst : e.src;
    adj[cursor[from]++] = reverse ? e.src : e.dst;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj.begin() + offsets[v], adj.begin() + offsets[v + 1]);
  }
}

}  // namespace

DirectedGraph DirectedGraph::from_edges(std::vector<std::string> names,
                                        std::span<const Edge> edges) {
  DirectedGraph g;
  const std::size_t n = names.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(names[i], static_cast<NodeIndex>(i)).second) {
      throw std::invalid_argument("duplicate node name: " + names[i]);
    }
  }
  g.names_ = std::move(names);

  g.edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : g.edges_) {
    if (e.src >= n || e.dst >= n) {
      throw std::out_of_range("edge endpoint is not a registered node");
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.self_loops_ = static_cast<std::size_t>(
      std::count_if(g.edges_.begin(), g.edges_.end(),
                    [](const Edge& e) { return e.is_self_loop(); }));

  build_csr(n, g.edges_, false, g.out_off_, g.out_adj_);
  build_csr(n, g.edges_, true, g.in_off_, g.in_adj_);

  g.und_off_.assign(n + 1, 0);
  g.und_adj_.clear();
  g.und_adj_.reserve(2 * g.edges_.size());
  for (NodeIndex v = 0; v < n; ++v) {
    auto out = g.out_neighbors(v);
    auto in = g.in_neighbors(v);
    const std::size_t start = g.und_adj_.size();
    std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                   std::back_inserter(g.und_adj_));
    auto self = std::find(g.und_adj_.begin() + static_cast<std::ptrdiff_t>(start),
                          g.und_adj_.end(), v);
    if (self != g.und_adj_.end()) g.und_adj_.erase(self);
    g.und_off_[v + 1] = g.und_adj_.size();
  }
  return g;
}

DirectedGraph DirectedGraph::with_anonymous_nodes(std::size_t n,
                                                  std::span<const Edge> edges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return from_edges(std::move(names), edges);
}

bool DirectedGraph::has_edge(NodeIndex u, NodeIndex v) const {
  auto out = out_neighbors(u);
  return std::binary_search(out.begin(), out.end(), v);
}

std::optional<NodeIndex> DirectedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DirectedGraph DirectedGraph::induced_subgraph(std::span<const NodeIndex> nodes) const {
  std::vector<std::int64_t> local(node_count(), -1);
  std::vector<std::string> sub_names;
  std::vector<NodeIndex> order;
  for (NodeIndex v : nodes) {
    if (v >= node_count()) throw std::out_of_range("node index out of range");
    if (local[v] >= 0) continue;
    local[v] = static_cast<std::int64_t>(order.size());
    order.push_back(v);
    sub_names.push_back(names_[v]);
  }
  std::vector<Edge> sub_edges;
  for (NodeIndex v : order) {
    for (NodeIndex w : out_neighbors(v)) {
      if (local[w] >= 0) {
        sub_edges.push_back({static_cast<NodeIndex>(local[v]),
                             static_cast<NodeIndex>(local[w])});
      }
    }
  }
  return from_edges(std::move(sub_names), sub_edges);
}

DirectedGraph DirectedGraph::relabeled(std::span<const NodeIndex> permutation) const {
  if (permutation.size() != node_count()) {
    throw std::invalid_argument("permutation size does not match node count");
  }
  std::vector<std::string> new_names(node_count());
  std::vector<bool> seen(node_count(), false);
  for (NodeIndex v = 0; v < node_count(); ++v) {
    const NodeIndex to = permutation[v];
    if (to >= node_count() || seen[to]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[to] = true;
    new_names[to] = names_[v];
  }
  std::vector<Edge> new_edges;
  new_edges.reserve(edges_.size());
  for (const Edge& e : edges_) new_edges.push_back({permutation[e.src], permutation[e.dst]});
  return from_edges(std::move(new_names), new_edges);
}

LoadResult load_edge_list(std::istream& in, const ParseOptions& options) {
  LoadResult result;
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeIndex> index;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.emplace(token, static_cast<NodeIndex>(names.size()));
    if (inserted) names.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string src, dst;
    if (!(fields >> src >> dst)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected at least two whitespace-separated tokens",
                       line_no);
    }
    ++result.lines_read;
    if (src == dst && !options.allow_self_loops) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop not allowed",
                       line_no);
    }
    const Edge e{intern(src), intern(dst)};
    const std::uint64_t key = (static_cast<std::uint64_t>(e.src) << 32) | e.dst;
    if (!seen.insert(key).second) {
      ++result.duplicate_edges;
      continue;
    }
    if (e.is_self_loop()) ++result.self_loops;
    edges.push_back(e);
  }
  if (edges.empty()) throw ParseError("edge list contains no edges", 0);
  result.graph = DirectedGraph::from_edges(std::move(names), edges);
  return result;
}

LoadResult load_edge_list(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  return load_edge_list(in, options);
}

void write_edge_list(const DirectedGraph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << g.name(e.src) << '\t' << g.name(e.dst) << '\n';
}

void write_edge_list(const DirectedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path.string());
  write_edge_list(g, out);
}

DegreeSequences degree_sequences(const DirectedGraph& g) {
  DegreeSequences d;
  d.in.resize(g.node_count());
  d.out.resize(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    d.in[v] = g.in_degree(v);
    d.out[v] = g.out_degree(v);
  }
  return d;
}

}  // namespace hypermotif
