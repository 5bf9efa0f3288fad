#ifndef MONOPOLAR_ORACLE_HPP
#define MONOPOLAR_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "monopolar/extension.hpp"

// Ground-truth solvers for testing. They share nothing with the solver code
// paths beyond the Graph type: everything runs on 64-bit vertex masks.
namespace monopolar::oracle {

// Thrown instead of answering when an input exceeds the configured cap.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  int extension_cap = 20;
  int mis_cap = 30;
  int modulator_cap = 10;
};

struct Report {
  bool yes = false;
  std::vector<MonopolarPartition> witnesses;  // first witness, or all of them with collect_all
  std::uint64_t examined = 0;                 // completions tried
};

// Tries every completion of the Undecided vertices.
Report brute_force_extension(const Graph& g, const Labeling& labels, bool collect_all = false,
                             const Limits& limits = {});

// All maximal independent sets (pivoting Bron-Kerbosch on the complement),
// each ascending, in enumeration order.
std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g, const Limits& limits = {});

// Yes iff some maximal independent set has a cluster-graph complement.
SolveResult mis_recognize(const Graph& g, const Limits& limits = {});

// Every inclusion-minimal vertex set whose removal leaves g chair-free,
// ordered by (size, members).
std::vector<std::vector<Vertex>> minimal_chair_modulators(const Graph& g, const Limits& limits = {});

// Size of a smallest claw-free vertex (edge) modulator by subset search.
int min_claw_vertex_modulator_size(const Graph& g, const Limits& limits = {});
int min_claw_edge_modulator_size(const Graph& g, int max_edges = 20);

}  // namespace monopolar::oracle

#endif  // MONOPOLAR_ORACLE_HPP
