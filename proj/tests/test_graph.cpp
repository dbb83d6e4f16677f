#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "hypermotif/graph.hpp"
#include "random_graphs.hpp"

using namespace hypermotif;

namespace {

DirectedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in).graph;
}

}  // namespace

TEST(EdgeList, ParsesNamesCommentsAndExtraColumns) {
  std::istringstream in("# regulators\nlacI lacZ 1\nlacZ\tlacY\n\ncrp crp\nlacI lacZ\n");
  auto r = load_edge_list(in);
  EXPECT_EQ(r.graph.node_count(), 4u);
  EXPECT_EQ(r.graph.edge_count(), 3u);
  EXPECT_EQ(r.duplicate_edges, 1u);
  EXPECT_EQ(r.self_loops, 1u);
  auto lacI = r.graph.find("lacI");
  auto lacZ = r.graph.find("lacZ");
  ASSERT_TRUE(lacI && lacZ);
  EXPECT_TRUE(r.graph.has_edge(*lacI, *lacZ));
  EXPECT_FALSE(r.graph.has_edge(*lacZ, *lacI));
  EXPECT_TRUE(r.graph.has_self_loop(*r.graph.find("crp")));
}

TEST(EdgeList, MalformedLineReportsItsNumber) {
  std::istringstream in("a b\nc\n");
  try {
    load_edge_list(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(EdgeList, EmptyInputIsAnError) {
  std::istringstream in("# nothing\n\n");
  EXPECT_THROW(load_edge_list(in), ParseError);
}

TEST(EdgeList, SelfLoopsCanBeRejected) {
  std::istringstream in("a a\n");
  ParseOptions opt;
  opt.allow_self_loops = false;
  EXPECT_THROW(load_edge_list(in, opt), ParseError);
}

TEST(EdgeList, RoundTripsThroughFile) {
  auto g = testkit::random_digraph(30, 0.1, 4, 0.1);
  auto path = std::filesystem::temp_directory_path() / "hypermotif_roundtrip.tsv";
  write_edge_list(g, path);
  auto back = load_edge_list(path).graph;
  std::filesystem::remove(path);
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (const auto& e : g.edges()) {
    auto u = back.find(g.name(e.src)), v = back.find(g.name(e.dst));
    ASSERT_TRUE(u && v);
    EXPECT_TRUE(back.has_edge(*u, *v));
  }
}

TEST(DirectedGraph, AdjacencyIsConsistent) {
  auto g = testkit::random_digraph(40, 0.08, 11, 0.2);
  std::size_t in_sum = 0, out_sum = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    in_sum += g.in_degree(v);
    out_sum += g.out_degree(v);
    for (auto w : g.out_neighbors(v)) EXPECT_TRUE(g.has_edge(v, w));
    for (auto w : g.in_neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::count(nb.begin(), nb.end(), v), 0);
    for (NodeIndex w = 0; w < g.node_count(); ++w) {
      bool adjacent = w != v && (g.has_edge(v, w) || g.has_edge(w, v));
      EXPECT_EQ(adjacent, std::binary_search(nb.begin(), nb.end(), w));
    }
  }
  EXPECT_EQ(in_sum, g.edge_count());
  EXPECT_EQ(out_sum, g.edge_count());
}

TEST(DirectedGraph, DuplicateEdgesCollapse) {
  std::vector<Edge> edges{{0, 1}, {0, 1}, {1, 0}};
  auto g = DirectedGraph::with_anonymous_nodes(2, edges);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(DirectedGraph, BadIndexAndDuplicateNames) {
  std::vector<Edge> bad{{0, 5}};
  EXPECT_THROW(DirectedGraph::with_anonymous_nodes(2, bad), std::out_of_range);
  std::vector<Edge> none;
  EXPECT_THROW(DirectedGraph::from_edges({"a", "a"}, none), std::invalid_argument);
}

TEST(DirectedGraph, InducedSubgraphKeepsOnlyInternalEdges) {
  auto g = parse("a b\nb c\nc a\nc d\nd d\n");
  std::vector<NodeIndex> nodes{*g.find("c"), *g.find("d"), *g.find("a")};
  auto s = g.induced_subgraph(nodes);
  EXPECT_EQ(s.names(), (std::vector<std::string>{"c", "d", "a"}));
  EXPECT_EQ(s.edge_count(), 3u);  // c->a, c->d, d->d
  EXPECT_TRUE(s.has_self_loop(1));
}

TEST(DirectedGraph, RelabelingPreservesDegrees) {
  auto g = testkit::random_digraph(25, 0.15, 3, 0.1);
  std::vector<NodeIndex> perm(g.node_count());
  for (NodeIndex i = 0; i < perm.size(); ++i) perm[i] = static_cast<NodeIndex>((i * 7 + 3) % perm.size());
  auto h = g.relabeled(perm);
  auto dg = degree_sequences(g), dh = degree_sequences(h);
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    EXPECT_EQ(dg.in[v], dh.in[perm[v]]);
    EXPECT_EQ(dg.out[v], dh.out[perm[v]]);
    EXPECT_EQ(g.name(v), h.name(perm[v]));
  }
  EXPECT_EQ(h.self_loop_count(), g.self_loop_count());
}
