#ifndef MONOPOLAR_TESTS_SUPPORT_HPP
#define MONOPOLAR_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "monopolar/generate.hpp"
#include "monopolar/graph.hpp"

namespace monopolar::testing {

// Chair as (a, b, c, d, e) = (0, 1, 2, 3, 4).
inline Graph chair() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}); }
inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph edge() { return Graph(2, {{0, 1}}); }
inline Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
// Rim 0..4, hub 5.
inline Graph w5() {
  Graph g = c5();
  Graph w(6, std::span<const Edge>(g.edges()));
  for (int v = 0; v < 5; ++v) w.add_edge(v, 5);
  return w;
}
// Paw (s, t, q, r) = (0, 1, 2, 3): triangle 0 2 3, pendant 1 on 0.
inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}}); }
// Diamond (s, t, q, r) = (0, 1, 2, 3): 0 and 1 non-adjacent.
inline Graph diamond() { return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}
// K_{1,k} with centre 0.
inline Graph star(int k) {
  Graph g(k + 1);
  for (int v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}
inline Graph disjoint(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(a.size() + e.u, a.size() + e.v);
  return g;
}

// The labelled graph on n vertices whose edge set is `mask` over pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

inline std::uint64_t graph_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline Labeling random_labeling(int n, Rng& rng) {
  Labeling labels(n);
  for (int v = 0; v < n; ++v) labels.set(v, static_cast<Side>(rng.below(3)));
  return labels;
}

inline Labeling labeling(int n, std::initializer_list<Vertex> cluster, std::initializer_list<Vertex> independent) {
  Labeling labels(n);
  for (Vertex v : cluster) labels.set(v, Side::Cluster);
  for (Vertex v : independent) labels.set(v, Side::Independent);
  return labels;
}

}  // namespace monopolar::testing

#endif  // MONOPOLAR_TESTS_SUPPORT_HPP
