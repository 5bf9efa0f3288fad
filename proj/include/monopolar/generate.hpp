#ifndef MONOPOLAR_GENERATE_HPP
#define MONOPOLAR_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monopolar/graph.hpp"

namespace monopolar {

// std::mt19937_64 with explicit, portable conversions (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Top 53 bits scaled to [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

Graph generate_gnp(int n, double p, Rng& rng);
// q-vertex independent side, c cliques over the remaining vertices, cross
// edges with probability p. Vertex labels are shuffled.
Graph generate_planted(int n, int c, int q, double p, Rng& rng);
// Line graph of a gnp(n, p) sample; vertex i is the i-th base edge in
// ascending order.
Graph generate_linegraph(int n, double p, Rng& rng);
// k disjoint chairs; chair j occupies vertices 5j..5j+4 as (a,b,c,d,e).
Graph generate_chairpath(int k);

// Dispatch on a kind name and its numeric parameters, as given on the
// command line. Throws InvalidInput on an unknown kind or bad parameters.
Graph generate(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed);

}  // namespace monopolar

#endif  // MONOPOLAR_GENERATE_HPP
