#ifndef MONOPOLAR_PATTERNS_HPP
#define MONOPOLAR_PATTERNS_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "monopolar/graph.hpp"

namespace monopolar {

// The small induced subgraphs the solvers reason about. Vertex order inside a
// witness follows the conventional labelling:
//   P3      (u, v, w)        v is the middle vertex, u < w
//   Paw     (s, t, q, r)     triangle s q r, pendant t on s, q < r
//   Diamond (s, t, q, r)     s, t the non-adjacent pair, s < t, q < r
//   C4      (u, v, w, x)     cycle order, u smallest, v < x
//   Claw    (u, v, w, x)     centre u, leaves v < w < x
//   Chair   (a, b, c, d, e)  edges ab bc bd de, a < c
enum class PatternKind { P3, Paw, Diamond, C4, Claw, Chair };

std::string_view name(PatternKind kind);

struct PatternWitness {
  PatternKind kind = PatternKind::P3;
  std::vector<Vertex> vertices;

  friend auto operator<=>(const PatternWitness&, const PatternWitness&) = default;
};

// Checks that g restricted to the witness tuple has exactly the pattern's
// edges: every listed adjacency present, every other pair non-adjacent.
bool realizes_pattern(const Graph& g, const PatternWitness& w);

// Lexicographically smallest induced chair (by sorted vertex set) using only
// vertices of `eligible`.
std::optional<PatternWitness> find_induced_chair(const Graph& g, const Bitset& eligible);

// Lexicographically smallest induced claw of g minus `forbidden` vertices and
// minus `forbidden_edges`. nullopt certifies that residual graph claw-free.
std::optional<PatternWitness> find_induced_claw(const Graph& g, const Bitset& forbidden,
                                                std::span<const Edge> forbidden_edges = {});
std::optional<PatternWitness> find_induced_claw(const Graph& g);

// Every induced P3 of g, ordered by sorted vertex set.
std::vector<PatternWitness> enumerate_induced_p3s(const Graph& g);

// Whether the P3 (u, v, w) meets one of the goodness conditions relative to
// the cluster-constrained set: a constrained vertex in N[u] ∪ N[v] ∪ N[w],
// a vertex of the P3 on a triangle, or an edge of the P3 on an induced C4.
bool is_good_p3(const Graph& g, const PatternWitness& p3, const Bitset& cluster_constrained);

// Smallest induced P3 (by sorted vertex set) that is not good; nullopt means
// g is good with respect to `cluster_constrained`.
std::optional<PatternWitness> find_c_bad_p3(const Graph& g, const Bitset& cluster_constrained);

// Every induced paw, diamond and C4, once each, sorted by (kind, tuple).
std::vector<PatternWitness> enumerate_constraint_patterns(const Graph& g);

bool on_triangle(const Graph& g, Vertex v);
bool edge_on_induced_c4(const Graph& g, Vertex u, Vertex v);

}  // namespace monopolar

#endif  // MONOPOLAR_PATTERNS_HPP
