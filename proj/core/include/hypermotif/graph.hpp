#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypermotif {

using NodeIndex = std::uint32_t;

struct Edge {
  NodeIndex src = 0;
  NodeIndex dst = 0;

  bool is_self_loop() const { return src == dst; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed or empty edge-list input. `line()` is 1-based, 0 when
/// the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Directed simple graph with optional self-loops.
///
/// Node identifiers are opaque strings; dense indices are assigned in
/// insertion order. The graph is immutable once built: adjacency is stored as
/// sorted CSR arrays in both directions, so concurrent readers are safe.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds a graph from names and an edge list over indices into `names`.
  /// Duplicate edges are collapsed. Throws std::out_of_range on a bad index
  /// and std::invalid_argument on duplicate names.
  static DirectedGraph from_edges(std::vector<std::string> names,
                                  std::span<const Edge> edges);

  /// Graph with nodes "0".."n-1".
  static DirectedGraph with_anonymous_nodes(std::size_t n,
                                            std::span<const Edge> edges);

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t self_loop_count() const { return self_loops_; }

  /// Edges sorted by (src, dst).
  std::span<const Edge> edges() const { return edges_; }

  std::span<const NodeIndex> out_neighbors(NodeIndex v) const {
    return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
  }
  std::span<const NodeIndex> in_neighbors(NodeIndex v) const {
    return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
  }
  /// Sorted union of in- and out-neighbours, excluding v itself.
  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {und_adj_.data() + und_off_[v], und_adj_.data() + und_off_[v + 1]};
  }

  std::size_t out_degree(NodeIndex v) const { return out_off_[v + 1] - out_off_[v]; }
  std::size_t in_degree(NodeIndex v) const { return in_off_[v + 1] - in_off_[v]; }

  bool has_edge(NodeIndex u, NodeIndex v) const;
  bool has_self_loop(NodeIndex v) const { return has_edge(v, v); }

  const std::string& name(NodeIndex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<NodeIndex> find(std::string_view name) const;

  /// Subgraph induced by `nodes` (order preserved, duplicates ignored).
  DirectedGraph induced_subgraph(std::span<const NodeIndex> nodes) const;

  /// Same structure with every node renamed through `permutation`, where node
  /// v of this graph becomes node permutation[v] of the result.
  DirectedGraph relabeled(std::span<const NodeIndex> permutation) const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_off_{0}, in_off_{0}, und_off_{0};
  std::vector<NodeIndex> out_adj_, in_adj_, und_adj_;
  std::size_t self_loops_ = 0;
};

struct ParseOptions {
  bool allow_self_loops = true;
};

struct LoadResult {
  DirectedGraph graph;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
  std::size_t lines_read = 0;
};

/// Reads "source<ws>target" lines; '#' starts a comment line. Extra columns
/// are ignored. Throws ParseError on a malformed line or an edge-free input.
LoadResult load_edge_list(std::istream& in, const ParseOptions& options = {});
LoadResult load_edge_list(const std::filesystem::path& path,
                          const ParseOptions& options = {});

/// One "src\tdst" line per edge in edge order.
void write_edge_list(const DirectedGraph& g, std::ostream& out);
void write_edge_list(const DirectedGraph& g, const std::filesystem::path& path);

struct DegreeSequences {
  std::vector<std::size_t> in;   // indexed by NodeIndex
  std::vector<std::size_t> out;  // indexed by NodeIndex

  friend bool operator==(const DegreeSequences&, const DegreeSequences&) = default;
};

DegreeSequences degree_sequences(const DirectedGraph& g);

}  // namespace hypermotif
