#include "monopolar/fpt.hpp"

#include <algorithm>
#include <stdexcept>

#include "monopolar/patterns.hpp"

namespace monopolar {

namespace {

// Branch i of a search node makes the elements tried by branches 0..i-1
// permanent, so the branches explore disjoint solution sets. A claw with no
// deletable element left ends its branch.

struct VertexSearch {
  const Graph& g;
  Bitset deleted;
  Bitset permanent;
  DeletionStats stats;

  // Greedy packing of claws that share no deletable vertex, stopping once it
  // exceeds `budget`. The first claw is the branching claw.
  std::vector<PatternWitness> pack(int budget) const {
    std::vector<PatternWitness> packing;
    Bitset blocked = deleted;
    while (static_cast<int>(packing.size()) <= budget) {
      auto claw = find_induced_claw(g, blocked);
      if (!claw) break;
      bool deletable = false;
      for (Vertex v : claw->vertices) {
        if (!permanent[v]) {
          blocked.set(v);
          deletable = true;
        }
      }
      packing.push_back(std::move(*claw));
      if (!deletable) break;
    }
    return packing;
  }

  bool run(int budget) {
    ++stats.nodes;
    auto packing = pack(budget);
    const bool hopeless = !packing.empty() && std::all_of(packing.back().vertices.begin(),
                                                          packing.back().vertices.end(),
                                                          [&](Vertex v) { return permanent[v]; });
    if (packing.empty() || hopeless || static_cast<int>(packing.size()) > budget) {
      ++stats.leaves;
      return packing.empty();
    }
    std::vector<Vertex> fixed;
    bool found = false;
    for (Vertex v : packing.front().vertices) {
      if (permanent[v]) continue;
      deleted.set(v);
      found = run(budget - 1);
      if (found) break;
      deleted.reset(v);
      permanent.set(v);
      fixed.push_back(v);
    }
    for (Vertex v : fixed) permanent.reset(v);
    return found;
  }
};

// Smallest induced claw of `residual` none of whose centre-leaf edges is in
// `used` (one row per vertex).
std::optional<PatternWitness> find_claw_avoiding(const Graph& residual, const std::vector<Bitset>& used) {
  for (Vertex u = 0; u < residual.size(); ++u) {
    const Bitset free = residual.row(u) - used[u];
    for (auto v = free.find_first(); v != Bitset::npos; v = free.find_next(v)) {
      const Bitset after_v = free - residual.row(v);
      for (auto w = after_v.find_next(v); w != Bitset::npos; w = after_v.find_next(w)) {
        const Bitset after_w = after_v - residual.row(w);
        const auto x = after_w.find_next(w);
        if (x != Bitset::npos) {
          return PatternWitness{PatternKind::Claw,
                                {u, static_cast<Vertex>(v), static_cast<Vertex>(w), static_cast<Vertex>(x)}};
        }
      }
    }
  }
  return std::nullopt;
}

struct EdgeSearch {
  Graph residual;
  std::vector<Bitset> permanent;  // symmetric rows
  std::vector<Edge> deleted;
  DeletionStats stats;

  EdgeSearch(const Graph& g) : residual(g), permanent(g.size(), Bitset(g.size())) {}

  bool is_permanent(Vertex centre, Vertex leaf) const { return permanent[centre][leaf]; }

  // Greedy packing of claws whose deletable centre-leaf edges are pairwise
  // disjoint.
  std::vector<PatternWitness> pack(int budget) const {
    std::vector<PatternWitness> packing;
    std::vector<Bitset> used(residual.size(), Bitset(residual.size()));
    while (static_cast<int>(packing.size()) <= budget) {
      auto claw = find_claw_avoiding(residual, used);
      if (!claw) break;
      const auto& t = claw->vertices;
      bool deletable = false;
      for (int i = 1; i < 4; ++i) {
        if (is_permanent(t[0], t[i])) continue;
        used[t[0]].set(t[i]);
        used[t[i]].set(t[0]);
        deletable = true;
      }
      packing.push_back(std::move(*claw));
      if (!deletable) break;
    }
    return packing;
  }

  bool run(int budget) {
    ++stats.nodes;
    auto packing = pack(budget);
    bool hopeless = false;
    if (!packing.empty()) {
      const auto& t = packing.back().vertices;
      hopeless = is_permanent(t[0], t[1]) && is_permanent(t[0], t[2]) && is_permanent(t[0], t[3]);
    }
    if (packing.empty() || hopeless || static_cast<int>(packing.size()) > budget) {
      ++stats.leaves;
      return packing.empty();
    }
    const auto t = packing.front().vertices;
    std::vector<Vertex> fixed;
    bool found = false;
    for (int i = 1; i < 4; ++i) {
      if (is_permanent(t[0], t[i])) continue;
      const Edge e(t[0], t[i]);
      residual.remove_edge(e.u, e.v);
      deleted.push_back(e);
      found = run(budget - 1);
      if (found) break;
      deleted.pop_back();
      residual.add_edge(e.u, e.v);
      permanent[e.u].set(e.v);
      permanent[e.v].set(e.u);
      fixed.push_back(t[i]);
    }
    for (Vertex leaf : fixed) {
      permanent[t[0]].reset(leaf);
      permanent[leaf].reset(t[0]);
    }
    return found;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> claw_vertex_deletion(const Graph& g, int k, DeletionStats* stats) {
  if (k < 0) throw InvalidInput("budget must be non-negative");
  VertexSearch search{g, Bitset(g.size()), Bitset(g.size()), {}};
  const bool found = search.run(k);
  if (stats) *stats = search.stats;
  if (!found) return std::nullopt;
  return to_vector(search.deleted);
}

std::optional<std::vector<Edge>> claw_edge_deletion(const Graph& g, int k, DeletionStats* stats) {
  if (k < 0) throw InvalidInput("budget must be non-negative");
  EdgeSearch search(g);
  const bool found = search.run(k);
  if (stats) *stats = search.stats;
  if (!found) return std::nullopt;
  std::sort(search.deleted.begin(), search.deleted.end());
  return search.deleted;
}

ModulatorResult min_modulator(const Graph& g, ModulatorKind kind) {
  ModulatorResult result;
  result.kind = kind;
  for (int k = 0;; ++k) {
    DeletionStats stats;
    if (kind == ModulatorKind::Vertex) {
      auto found = claw_vertex_deletion(g, k, &stats);
      result.leaves += stats.leaves;
      if (found) {
        result.vertices = std::move(*found);
        result.size = static_cast<int>(result.vertices.size());
        result.budget_used = k;
        return result;
      }
    } else {
      auto found = claw_edge_deletion(g, k, &stats);
      result.leaves += stats.leaves;
      if (found) {
        result.edges = std::move(*found);
        result.size = static_cast<int>(result.edges.size());
        result.budget_used = k;
        return result;
      }
    }
  }
}

std::vector<Vertex> edge_to_vertex_modulator(std::span<const Edge> edges) {
  std::vector<Vertex> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(std::min(e.u, e.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SolveResult recognize_with_modulator(const Graph& g, std::span<const Vertex> modulator,
                                     const SolverOptions& options) {
  std::vector<Vertex> members(modulator.begin(), modulator.end());
  std::sort(members.begin(), members.end());
  if (members.size() >= 63) throw InvalidInput("modulator too large to enumerate");

  SolveResult result;
  result.stats.modulator_size = static_cast<int>(members.size());
  result.stats.initial_measure = g.size();
  const std::uint64_t splits = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < splits; ++mask) {
    ++result.stats.assignments;
    Labeling labels(g.size());
    Bitset independent(g.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const bool to_independent = (mask >> i) & 1U;
      labels.set(members[i], to_independent ? Side::Independent : Side::Cluster);
      if (to_independent) independent.set(members[i]);
    }
    if (!is_independent_set(g, independent)) continue;
    ++result.stats.nodes;
    ++result.stats.leaves;
    SolveResult attempt = extend_with_modulator(g, labels, options);
    result.stats.use_2sat_calls += attempt.stats.use_2sat_calls;
    result.stats.p3_deletions += attempt.stats.p3_deletions;
    if (attempt.partition) {
      result.partition = std::move(attempt.partition);
      break;
    }
  }
  if (options.debug_checks && result.partition && !verify_partition(g, *result.partition)) {
    throw std::logic_error("FPT pipeline produced an invalid partition");
  }
  return result;
}

SolveResult recognize_fpt(const Graph& g, ModulatorKind mode, const SolverOptions& options) {
  ModulatorResult modulator = min_modulator(g, mode);
  std::vector<Vertex> vertices =
      mode == ModulatorKind::Vertex ? modulator.vertices : edge_to_vertex_modulator(modulator.edges);
  return recognize_with_modulator(g, vertices, options);
}

}  // namespace monopolar
