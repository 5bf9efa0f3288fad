#ifndef MONOPOLAR_GRAPH_HPP
#define MONOPOLAR_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace monopolar {

using Vertex = int;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised for malformed text input. `line` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on vertices 0..n-1.
//
// Keeps both a sorted neighbour list and a bitset row per vertex; pattern
// searches use the rows, iteration uses the lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<Edge> edges);
  Graph(int n, std::span<const Edge> edges);

  // Throws InvalidInput on self-loops, duplicates, or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  // Throws InvalidInput if the edge is absent.
  void remove_edge(Vertex u, Vertex v);

  int size() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u][v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  const Bitset& row(Vertex v) const { return rows_[v]; }

  // All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  Graph without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Bitset> rows_;
  int edge_count_ = 0;
};

// G[keep] with vertices renumbered densely; origin[i] is the source index of
// new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;
};

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep);

Bitset make_set(int n, std::initializer_list<Vertex> members);
Bitset make_set(int n, std::span<const Vertex> members);
std::vector<Vertex> to_vector(const Bitset& s);

bool is_independent_set(const Graph& g, const Bitset& s);

// True iff g[s] has no induced P3, i.e. every component of g[s] is complete.
bool is_cluster_graph(const Graph& g, const Bitset& s);

enum class Side : std::uint8_t { Undecided, Cluster, Independent };

// Per-vertex side constraints. Undecided means the vertex may go either way.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(int n) : sides_(n, Side::Undecided) {}

  int size() const { return static_cast<int>(sides_.size()); }
  Side operator[](Vertex v) const { return sides_[v]; }
  void set(Vertex v, Side s) { sides_[v] = s; }

  Bitset members(Side s) const;
  int count(Side s) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Side> sides_;
};

// A monopolar partition certificate (C, I); both lists ascending.
struct MonopolarPartition {
  std::vector<Vertex> cluster;
  std::vector<Vertex> independent;

  // Builds the partition from a per-vertex membership vector
  // (true = independent side).
  static MonopolarPartition from_membership(const std::vector<bool>& in_independent);

  friend bool operator==(const MonopolarPartition&, const MonopolarPartition&) = default;
};

// Universal certificate check: disjoint cover of V, I independent, C a
// cluster graph, and every labelled vertex on its required side.
bool verify_partition(const Graph& g, const MonopolarPartition& p, const Labeling& constraints);
bool verify_partition(const Graph& g, const MonopolarPartition& p);

// Text formats. Graph: '#' comment lines, header "n m", then m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
// Canonical form: header then edges ascending, one per line.
std::string to_text(const Graph& g);

// Constraint lines "v C" / "v I" (and "v CI" when allow_both is set).
Labeling parse_labeling(std::istream& in, int n, bool allow_both = false);
Labeling parse_labeling(std::string_view text, int n, bool allow_both = false);

// Partition text: "YES" / "C ..." / "I ..." or just "NO". nullopt for NO.
std::optional<MonopolarPartition> parse_partition(std::istream& in, int n);
std::optional<MonopolarPartition> parse_partition(std::string_view text, int n);
std::string format_partition(const std::optional<MonopolarPartition>& p);

}  // namespace monopolar

#endif  // MONOPOLAR_GRAPH_HPP
