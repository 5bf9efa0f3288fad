#include <gtest/gtest.h>

#include <sstream>

#include "monopolar/graph.hpp"
#include "support.hpp"

using namespace monopolar;
using namespace monopolar::testing;

TEST(ParseGraph, CycleOnFour) {
  const Graph g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(g, c4());
  EXPECT_EQ(g.edge_count(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(ParseGraph, SingleVertex) {
  const Graph g = parse_graph("1 0");
  EXPECT_EQ(g.size(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = parse_graph("# a path\n\n3 2\n# middle\n0 1\n1 2\n");
  EXPECT_EQ(g, path3());
}

TEST(ParseGraph, ErrorsNameTheLine) {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("2 1\n0 0"), 2);           // self-loop
  EXPECT_EQ(line_of("3 2\n0 1\n1 0"), 3);      // duplicate
  EXPECT_EQ(line_of("3 1\n0 3"), 2);           // out of range
  EXPECT_EQ(line_of("x y"), 1);                // header
  EXPECT_EQ(line_of("3 2\n0 1"), 0);           // missing edge
  EXPECT_EQ(line_of("3 1\n0 1\n1 2"), 3);      // extra edge
  EXPECT_EQ(line_of("3 1\n0 1 2"), 2);         // trailing token
  EXPECT_EQ(line_of("-1 0"), 1);
  EXPECT_EQ(line_of(""), 0);
}

TEST(ParseGraph, RoundTripCanonicalForm) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = generate_gnp(static_cast<int>(rng.below(12)), 0.4, rng);
    const std::string text = to_text(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(to_text(parse_graph(text)), text);
  }
}

TEST(GraphEdit, RejectsBadEdges) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InvalidInput);
  EXPECT_THROW(g.add_edge(0, 3), InvalidInput);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), InvalidInput);
  EXPECT_THROW(g.remove_edge(1, 2), InvalidInput);
  g.remove_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(GraphEdit, NeighboursStaySorted) {
  Graph g(5);
  g.add_edge(0, 4);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(0, 1);
  const auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  EXPECT_EQ(g.degree(0), 4);
}

TEST(InducedSubgraph, RenumbersDensely) {
  const InducedSubgraph sub = induced_subgraph(chair(), make_set(5, {1, 3, 4}));
  EXPECT_EQ(sub.origin, (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(sub.graph, path3());
}

TEST(IndependentSet, Examples) {
  EXPECT_TRUE(is_independent_set(c4(), make_set(4, {0, 2})));
  EXPECT_TRUE(is_independent_set(c4(), make_set(4, {})));
  EXPECT_TRUE(is_independent_set(Graph(0), Bitset(0)));
  EXPECT_FALSE(is_independent_set(edge(), make_set(2, {0, 1})));
}

TEST(ClusterGraph, Examples) {
  EXPECT_TRUE(is_cluster_graph(triangle(), make_set(3, {0, 1, 2})));
  EXPECT_FALSE(is_cluster_graph(path3(), make_set(3, {0, 1, 2})));
  EXPECT_TRUE(is_cluster_graph(chair(), make_set(5, {1, 4})));
}

// Brute-force P3 scan over every subset of every graph, n <= 5, plus
// sampled graphs up to n = 8.
bool has_induced_p3(const Graph& g, const Bitset& s) {
  const auto vs = to_vector(s);
  for (Vertex a : vs)
    for (Vertex b : vs)
      for (Vertex c : vs)
        if (a < c && a != b && b != c && g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c)) return true;
  return false;
}

TEST(ClusterGraph, MatchesBruteForceP3Scan) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
        Bitset s(n, sub);
        ASSERT_EQ(is_cluster_graph(g, s), !has_induced_p3(g, s));
      }
    }
  }
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = generate_gnp(8, rng.uniform01(), rng);
    Bitset s(8, rng.below(256));
    ASSERT_EQ(is_cluster_graph(g, s), !has_induced_p3(g, s));
  }
}

TEST(VerifyPartition, Examples) {
  EXPECT_TRUE(verify_partition(chair(), {{1, 3}, {0, 2, 4}}));
  EXPECT_FALSE(verify_partition(edge(), {{}, {0, 1}}));
  Labeling labels(3);
  labels.set(0, Side::Independent);
  EXPECT_FALSE(verify_partition(triangle(), {{0, 1, 2}, {}}, labels));
  EXPECT_TRUE(verify_partition(Graph(0), {{}, {}}));
}

TEST(VerifyPartition, RejectsBadCovers) {
  const Graph g = path3();
  EXPECT_FALSE(verify_partition(g, {{1}, {0}}));              // 2 missing
  EXPECT_FALSE(verify_partition(g, {{0, 1}, {1, 2}}));        // 1 twice
  EXPECT_FALSE(verify_partition(g, {{0, 1, 2}, {}}));         // C has a P3
  EXPECT_FALSE(verify_partition(g, {{1}, {0, 2, 7}}));        // out of range
  EXPECT_TRUE(verify_partition(g, {{1}, {0, 2}}));
  EXPECT_TRUE(verify_partition(g, {{0, 1}, {2}}, Labeling()));  // empty labelling = none
}

TEST(Labels, ParseConstraintFile) {
  const Labeling l = parse_labeling("# c\n0 C\n2 I\n", 4);
  EXPECT_EQ(l[0], Side::Cluster);
  EXPECT_EQ(l[1], Side::Undecided);
  EXPECT_EQ(l[2], Side::Independent);
  EXPECT_EQ(l.count(Side::Undecided), 2);
  EXPECT_THROW(parse_labeling("0 CI\n", 2), ParseError);
  EXPECT_EQ(parse_labeling("0 CI\n", 2, true)[0], Side::Undecided);
  EXPECT_THROW(parse_labeling("0 C\n0 I\n", 2), ParseError);
  EXPECT_THROW(parse_labeling("5 C\n", 2), ParseError);
  EXPECT_THROW(parse_labeling("0 X\n", 2), ParseError);
}

TEST(PartitionText, FormatAndParse) {
  const MonopolarPartition p{{0, 2}, {1, 3}};
  EXPECT_EQ(format_partition(p), "YES\nC 0 2\nI 1 3\n");
  EXPECT_EQ(format_partition(std::nullopt), "NO\n");
  EXPECT_EQ(format_partition(MonopolarPartition{{}, {0}}), "YES\nC\nI 0\n");
  EXPECT_EQ(parse_partition(format_partition(p), 4), p);
  EXPECT_EQ(parse_partition("NO\n", 4), std::nullopt);
  EXPECT_THROW(parse_partition("MAYBE\n", 4), ParseError);
}
