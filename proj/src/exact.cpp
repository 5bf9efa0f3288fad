#include "monopolar/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace monopolar {

std::int64_t leaf_bound(int measure) {
  const double bound = std::ceil(std::pow(kBranchingBase, measure));
  if (bound >= static_cast<double>(std::numeric_limits<std::int64_t>::max())) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(bound);
}

Normalization normalize_instance(const Graph& g, Labeling labels, const SolverOptions& options) {
  const int n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    if (labels[v] != Side::Independent) continue;
    for (Vertex u : g.neighbors(v)) {
      if (labels[u] == Side::Independent) {
        SolveResult no;
        no.stats.nodes = no.stats.leaves = 1;
        return no;
      }
      labels.set(u, Side::Cluster);
    }
  }

  const Bitset cluster = labels.members(Side::Cluster);
  // A chair is connected with a missing edge, so it cannot sit inside C.
  if (find_induced_chair(g, cluster)) {
    SolveResult no;
    no.stats.nodes = no.stats.leaves = 1;
    return no;
  }

  auto chair = find_induced_chair(g, ~cluster);
  if (!chair) return extend_with_modulator(g, labels, options);

  if (options.debug_checks) {
    for (Vertex v : chair->vertices) {
      if (labels[v] != Side::Undecided) throw std::logic_error("normalized chair touches a labelled vertex");
    }
  }
  return NormalizedInstance{std::move(labels), std::move(*chair)};
}

Normalization normalize_instance(const ExtensionInstance& inst, const SolverOptions& options) {
  return normalize_instance(inst.graph, inst.labels, options);
}

std::array<Labeling, 4> chair_branches(const Labeling& labels, const PatternWitness& chair) {
  const Vertex a = chair.vertices[0], b = chair.vertices[1], c = chair.vertices[2], d = chair.vertices[3],
               e = chair.vertices[4];
  constexpr Side C = Side::Cluster, I = Side::Independent;
  std::array<Labeling, 4> out{labels, labels, labels, labels};
  auto assign = [](Labeling& l, std::initializer_list<std::pair<Vertex, Side>> sides) {
    for (auto [v, s] : sides) l.set(v, s);
  };
  assign(out[0], {{b, C}, {e, C}, {d, I}});
  assign(out[1], {{b, I}, {a, C}, {c, C}, {d, C}, {e, C}});
  assign(out[2], {{b, C}, {d, C}, {a, I}, {c, I}, {e, I}});
  assign(out[3], {{b, I}, {e, I}, {a, C}, {c, C}, {d, C}});
  return out;
}

namespace {

void absorb(SolveStats& total, const SolveStats& leaf) {
  total.use_2sat_calls += leaf.use_2sat_calls;
  total.p3_deletions += leaf.p3_deletions;
}

std::optional<MonopolarPartition> branch(const Graph& g, const Labeling& labels, int depth,
                                         const SolverOptions& options, SolveStats& stats) {
  ++stats.nodes;
  stats.max_depth = std::max(stats.max_depth, depth);
  Normalization norm = normalize_instance(g, labels, options);
  if (auto* solved = std::get_if<SolveResult>(&norm)) {
    ++stats.leaves;
    absorb(stats, solved->stats);
    return std::move(solved->partition);
  }
  auto& next = std::get<NormalizedInstance>(norm);
  const int measure = next.labels.count(Side::Undecided);
  auto children = chair_branches(next.labels, next.chair);
  for (int i = 0; i < 4; ++i) {
    if (options.on_branch) options.on_branch(measure, children[i].count(Side::Undecided), i);
    if (auto found = branch(g, children[i], depth + 1, options, stats)) return found;
  }
  return std::nullopt;
}

}  // namespace

SolveResult me_branch(const Graph& g, const Labeling& labels, const SolverOptions& options) {
  if (labels.size() != g.size()) throw InvalidInput("labelling size does not match the graph");
  SolveResult result;
  result.stats.initial_measure = labels.count(Side::Undecided);
  result.partition = branch(g, labels, 0, options, result.stats);
  if (options.debug_checks && result.partition && !verify_partition(g, *result.partition, labels)) {
    throw std::logic_error("exact solver produced an invalid partition");
  }
  return result;
}

SolveResult me_branch(const ExtensionInstance& inst, const SolverOptions& options) {
  return me_branch(inst.graph, inst.labels, options);
}

SolveResult recognize_exact(const Graph& g, const SolverOptions& options) {
  return me_branch(g, Labeling(g.size()), options);
}

SolveResult solve_list_partition(const Graph& g, const std::vector<SideList>& lists, const SolverOptions& options) {
  if (static_cast<int>(lists.size()) != g.size()) throw InvalidInput("one list per vertex required");
  return me_branch(g, lists_to_labeling(lists), options);
}

}  // namespace monopolar
