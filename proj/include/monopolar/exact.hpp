#ifndef MONOPOLAR_EXACT_HPP
#define MONOPOLAR_EXACT_HPP

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "monopolar/extension.hpp"
#include "monopolar/patterns.hpp"

namespace monopolar {

// Base of the leaf bound for the chair branching: the positive root of
// x^5 = x^2 + 3, rounded up.
inline constexpr double kBranchingBase = 1.3734;

// ceil(kBranchingBase^measure).
std::int64_t leaf_bound(int measure);

struct NormalizedInstance {
  Labeling labels;
  PatternWitness chair;  // all five vertices Undecided
};

// Either a finished answer or a labelling with an all-Undecided induced chair.
using Normalization = std::variant<SolveResult, NormalizedInstance>;

// Pushes neighbours of Independent vertices to Cluster, rejects chairs lying
// wholly on the cluster side, and solves directly once the cluster side is a
// chair-free modulator.
Normalization normalize_instance(const Graph& g, Labeling labels, const SolverOptions& options = {});
Normalization normalize_instance(const ExtensionInstance& inst, const SolverOptions& options = {});

// The four labellings explored for chair (a, b, c, d, e), in branch order:
//   b, e in C and d in I;  b in I, a c d e in C;
//   b d in C, a c e in I;  b e in I, a c d in C.
std::array<Labeling, 4> chair_branches(const Labeling& labels, const PatternWitness& chair);

// Exact Monopolar Extension by chair branching. Stats count the recursion
// tree; leaves never exceed leaf_bound(initial_measure).
SolveResult me_branch(const Graph& g, const Labeling& labels, const SolverOptions& options = {});
SolveResult me_branch(const ExtensionInstance& inst, const SolverOptions& options = {});

SolveResult recognize_exact(const Graph& g, const SolverOptions& options = {});

// Throws InvalidInput if some list is empty or the sizes differ.
SolveResult solve_list_partition(const Graph& g, const std::vector<SideList>& lists,
                                 const SolverOptions& options = {});

}  // namespace monopolar

#endif  // MONOPOLAR_EXACT_HPP
