#ifndef MONOPOLAR_EXTENSION_HPP
#define MONOPOLAR_EXTENSION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monopolar/graph.hpp"

namespace monopolar {

// A Monopolar Extension instance: find (C, I) with every Cluster-labelled
// vertex in C and every Independent-labelled vertex in I.
struct ExtensionInstance {
  Graph graph;
  Labeling labels;
};

struct SolveStats {
  std::int64_t nodes = 0;           // recursion-tree nodes
  std::int64_t leaves = 0;          // recursion-tree leaves
  int max_depth = 0;
  int initial_measure = 0;          // undecided vertices at entry
  int modulator_size = 0;           // FPT pipelines only
  std::int64_t assignments = 0;     // FPT pipelines: modulator assignments tried
  std::int64_t use_2sat_calls = 0;
  std::int64_t p3_deletions = 0;    // bad-P3 middle vertices removed
};

struct SolveResult {
  std::optional<MonopolarPartition> partition;  // present iff Yes
  SolveStats stats;

  bool yes() const { return partition.has_value(); }
};

struct SolverOptions {
  // Checks the chair-free modulator precondition and the structural claims
  // behind the bad-P3 deletion rule; throws std::logic_error on violation.
  bool debug_checks = false;
  // Called for every branch of the exact solver with (parent measure,
  // child measure, branch number 0..3).
  std::function<void(int, int, int)> on_branch;
};

// One pendant removal: `vertex` had `neighbor` as its only neighbour when
// removed (-1 when it was already isolated). `stranded` marks an isolated
// vertex that had neighbours in the host graph.
struct PendantRemoval {
  Vertex vertex;
  Vertex neighbor;
  bool stranded = false;
};

struct ReducedInstance {
  ExtensionInstance instance;     // on the surviving vertices, renumbered
  std::vector<Vertex> origin;     // origin[i] = source index of vertex i
  std::vector<PendantRemoval> log;  // source indices, in removal order

  // Lifts a partition of `instance` to one of the source graph.
  MonopolarPartition lift(const MonopolarPartition& reduced, int source_size) const;
};

// Repeatedly removes Undecided vertices of degree at most one, scanning in
// index order until none remain.
ReducedInstance reduce_degree_one(const ExtensionInstance& inst);

struct FoldedInstance {
  ExtensionInstance instance;   // G - I' with C' ∪ N(I') labelled Cluster
  std::vector<Vertex> origin;
  std::vector<Vertex> folded_independent;  // I' in source indices

  MonopolarPartition lift(const MonopolarPartition& folded, int source_size) const;
};

// nullopt when the Independent-labelled set is not independent (a No).
std::optional<FoldedInstance> fold_independent_side(const ExtensionInstance& inst);
std::optional<FoldedInstance> fold_independent_side(const Graph& g, const Labeling& labels);

// Allowed sides per vertex for List Monopolar Partition.
enum class SideList : std::uint8_t { None = 0, Cluster = 1, Independent = 2, Both = 3 };

// Throws InvalidInput on an empty list.
Labeling lists_to_labeling(const std::vector<SideList>& lists);
std::vector<SideList> labeling_to_lists(const Labeling& labels);
bool respects_lists(const MonopolarPartition& p, const std::vector<SideList>& lists);

// Decides (C', ∅)-extendability when C' is a vertex modulator of g to
// chair-free graphs. The modulator precondition is only checked with
// options.debug_checks.
SolveResult use_2sat(const Graph& g, const Bitset& cluster_constrained, const SolverOptions& options = {});

// Full Monopolar Extension when the Cluster-labelled set is a chair-free
// modulator of the instance graph: fold I', run use_2sat, lift I' back.
SolveResult extend_with_modulator(const ExtensionInstance& inst, const SolverOptions& options = {});
SolveResult extend_with_modulator(const Graph& g, const Labeling& labels, const SolverOptions& options = {});

bool is_chair_free_modulator(const Graph& g, const Bitset& modulator);

}  // namespace monopolar

#endif  // MONOPOLAR_EXTENSION_HPP
