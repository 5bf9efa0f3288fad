#ifndef MONOPOLAR_FPT_HPP
#define MONOPOLAR_FPT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monopolar/extension.hpp"

namespace monopolar {

// Counters for one bounded-search-tree run.
struct DeletionStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
};

// At most k vertices whose deletion leaves g claw-free, or nullopt. Branches
// four ways on the vertices of a claw; a greedy packing of vertex-disjoint
// claws prunes nodes whose budget cannot suffice. Leaves <= 4^k.
std::optional<std::vector<Vertex>> claw_vertex_deletion(const Graph& g, int k, DeletionStats* stats = nullptr);

// At most k edges whose deletion leaves g claw-free, or nullopt. Branches
// three ways on the centre-leaf edges of a claw. Leaves <= 3^k.
std::optional<std::vector<Edge>> claw_edge_deletion(const Graph& g, int k, DeletionStats* stats = nullptr);

enum class ModulatorKind { Vertex, Edge };

struct ModulatorResult {
  ModulatorKind kind = ModulatorKind::Vertex;
  std::vector<Vertex> vertices;  // kind == Vertex
  std::vector<Edge> edges;       // kind == Edge
  int size = 0;
  int budget_used = 0;           // the budget of the successful search
  std::int64_t leaves = 0;       // summed over all budgets tried
};

// Smallest claw-free modulator by iterative deepening on the budget.
ModulatorResult min_modulator(const Graph& g, ModulatorKind kind);

// One endpoint (the smaller) per edge, deduplicated and sorted.
std::vector<Vertex> edge_to_vertex_modulator(std::span<const Edge> edges);

// Monopolarity given a claw-free vertex modulator: tries every split of the
// modulator into cluster/independent (binary counter, bit set = independent)
// and solves each with the polynomial extension algorithm.
SolveResult recognize_with_modulator(const Graph& g, std::span<const Vertex> modulator,
                                     const SolverOptions& options = {});

SolveResult recognize_fpt(const Graph& g, ModulatorKind mode, const SolverOptions& options = {});

}  // namespace monopolar

#endif  // MONOPOLAR_FPT_HPP
