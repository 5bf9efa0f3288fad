#include "monopolar/extension.hpp"

#include <stdexcept>
#include <string>
#include <variant>

#include "monopolar/patterns.hpp"
#include "monopolar/twosat.hpp"

namespace monopolar {

namespace {

enum : signed char { kUnplaced = -1, kCluster = 0, kIndependent = 1 };

// Live-degree bookkeeping for peeling vertices off a fixed host graph.
class AliveSet {
 public:
  explicit AliveSet(const Graph& g) : g_(g), alive_(g.size()), degree_(g.size()) {
    alive_.set();
    for (Vertex v = 0; v < g.size(); ++v) degree_[v] = g.degree(v);
  }

  bool alive(Vertex v) const { return alive_[v]; }
  int degree(Vertex v) const { return degree_[v]; }
  int host_degree(Vertex v) const { return g_.degree(v); }
  const Bitset& members() const { return alive_; }

  void remove(Vertex v) {
    alive_.reset(v);
    for (Vertex u : g_.neighbors(v)) {
      if (alive_[u]) --degree_[u];
    }
  }

  Vertex some_live_neighbor(Vertex v) const {
    for (Vertex u : g_.neighbors(v)) {
      if (alive_[u]) return u;
    }
    return -1;
  }

 private:
  const Graph& g_;
  Bitset alive_;
  std::vector<int> degree_;
};

// Index-order passes removing unpinned vertices of live degree <= 1.
void peel_pendants(const Bitset& pinned, AliveSet& alive, std::vector<PendantRemoval>& log) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < static_cast<Vertex>(pinned.size()); ++v) {
      if (!alive.alive(v) || pinned[v] || alive.degree(v) > 1) continue;
      const Vertex neighbor = alive.some_live_neighbor(v);
      log.push_back({v, neighbor, neighbor < 0 && alive.host_degree(v) > 0});
      alive.remove(v);
      changed = true;
    }
  }
}

// A pendant goes to the side opposite its neighbour. An isolated vertex goes
// to I, unless peeling stranded it; then C, so the pendants hung on it
// go to I.
void place_pendant(const PendantRemoval& r, std::vector<signed char>& side) {
  if (r.neighbor < 0) {
    side[r.vertex] = r.stranded ? kCluster : kIndependent;
  } else {
    side[r.vertex] = side[r.neighbor] == kCluster ? kIndependent : kCluster;
  }
}

MonopolarPartition partition_from_sides(const std::vector<signed char>& side) {
  std::vector<bool> independent(side.size());
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] == kUnplaced) throw std::logic_error("vertex " + std::to_string(v) + " left unplaced");
    independent[v] = side[v] == kIndependent;
  }
  return MonopolarPartition::from_membership(independent);
}

void require(bool condition, const char* what) {
  if (!condition) throw std::logic_error(what);
}

// A removed bad-P3 middle vertex with the end vertices' other neighbours
// (source indices).
struct MiddleDeletion {
  Vertex u, v, w;
  Vertex u_other, w_other;
};

void place_middle(const MiddleDeletion& d, std::vector<signed char>& side) {
  const signed char su = side[d.u], sw = side[d.w];
  if (su == kCluster && sw == kCluster) {
    side[d.v] = kIndependent;
  } else if (su == kIndependent && sw == kIndependent) {
    side[d.v] = kCluster;
  } else {
    // Exactly one end is independent; `c_end` is the cluster end.
    const Vertex c_end = su == kCluster ? d.u : d.w;
    const Vertex x = su == kCluster ? d.u_other : d.w_other;
    require(x >= 0, "bad-P3 end vertex without a second neighbour");
    side[d.v] = kCluster;
    if (side[x] == kCluster) side[c_end] = kIndependent;
  }
}

void check_deletion_claims(const Graph& h, const Bitset& cluster, Vertex u, Vertex v, Vertex w) {
  require(h.degree(v) == 2, "bad-P3 middle vertex does not have degree 2");
  require(h.degree(u) == 2 && h.degree(w) == 2, "bad-P3 end vertex does not have degree 2");
  const Vertex x = h.neighbors(u)[0] == v ? h.neighbors(u)[1] : h.neighbors(u)[0];
  const Vertex y = h.neighbors(w)[0] == v ? h.neighbors(w)[1] : h.neighbors(w)[0];
  require(x != y, "bad-P3 end vertices share a second neighbour");
  require(!cluster[x] && !cluster[y], "bad-P3 end neighbour is cluster-constrained");
}

}  // namespace

MonopolarPartition ReducedInstance::lift(const MonopolarPartition& reduced, int source_size) const {
  std::vector<signed char> side(source_size, kUnplaced);
  for (Vertex v : reduced.cluster) side[origin[v]] = kCluster;
  for (Vertex v : reduced.independent) side[origin[v]] = kIndependent;
  for (auto it = log.rbegin(); it != log.rend(); ++it) place_pendant(*it, side);
  return partition_from_sides(side);
}

ReducedInstance reduce_degree_one(const ExtensionInstance& inst) {
  const Graph& g = inst.graph;
  Bitset pinned = inst.labels.members(Side::Cluster) | inst.labels.members(Side::Independent);
  AliveSet alive(g);
  ReducedInstance out;
  peel_pendants(pinned, alive, out.log);
  InducedSubgraph sub = induced_subgraph(g, alive.members());
  out.instance.graph = std::move(sub.graph);
  out.instance.labels = Labeling(static_cast<int>(sub.origin.size()));
  for (std::size_t i = 0; i < sub.origin.size(); ++i) {
    out.instance.labels.set(static_cast<Vertex>(i), inst.labels[sub.origin[i]]);
  }
  out.origin = std::move(sub.origin);
  return out;
}

MonopolarPartition FoldedInstance::lift(const MonopolarPartition& folded, int source_size) const {
  std::vector<signed char> side(source_size, kUnplaced);
  for (Vertex v : folded.cluster) side[origin[v]] = kCluster;
  for (Vertex v : folded.independent) side[origin[v]] = kIndependent;
  for (Vertex v : folded_independent) side[v] = kIndependent;
  return partition_from_sides(side);
}

std::optional<FoldedInstance> fold_independent_side(const ExtensionInstance& inst) {
  return fold_independent_side(inst.graph, inst.labels);
}

std::optional<FoldedInstance> fold_independent_side(const Graph& g, const Labeling& labels) {
  const Bitset independent = labels.members(Side::Independent);
  if (!is_independent_set(g, independent)) return std::nullopt;
  Bitset cluster = labels.members(Side::Cluster);
  for (auto v = independent.find_first(); v != Bitset::npos; v = independent.find_next(v)) {
    cluster |= g.row(static_cast<Vertex>(v));
  }
  FoldedInstance out;
  InducedSubgraph sub = induced_subgraph(g, ~independent);
  out.instance.graph = std::move(sub.graph);
  out.instance.labels = Labeling(static_cast<int>(sub.origin.size()));
  for (std::size_t i = 0; i < sub.origin.size(); ++i) {
    if (cluster[sub.origin[i]]) out.instance.labels.set(static_cast<Vertex>(i), Side::Cluster);
  }
  out.origin = std::move(sub.origin);
  out.folded_independent = to_vector(independent);
  return out;
}

Labeling lists_to_labeling(const std::vector<SideList>& lists) {
  Labeling labels(static_cast<int>(lists.size()));
  for (std::size_t v = 0; v < lists.size(); ++v) {
    switch (lists[v]) {
      case SideList::None: throw InvalidInput("empty list for vertex " + std::to_string(v));
      case SideList::Cluster: labels.set(static_cast<Vertex>(v), Side::Cluster); break;
      case SideList::Independent: labels.set(static_cast<Vertex>(v), Side::Independent); break;
      case SideList::Both: break;
    }
  }
  return labels;
}

std::vector<SideList> labeling_to_lists(const Labeling& labels) {
  std::vector<SideList> lists(labels.size(), SideList::Both);
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (labels[v] == Side::Cluster) lists[v] = SideList::Cluster;
    if (labels[v] == Side::Independent) lists[v] = SideList::Independent;
  }
  return lists;
}

bool respects_lists(const MonopolarPartition& p, const std::vector<SideList>& lists) {
  auto allows = [&](Vertex v, SideList side) {
    return v >= 0 && v < static_cast<Vertex>(lists.size()) &&
           (static_cast<unsigned>(lists[v]) & static_cast<unsigned>(side)) != 0;
  };
  for (Vertex v : p.cluster) {
    if (!allows(v, SideList::Cluster)) return false;
  }
  for (Vertex v : p.independent) {
    if (!allows(v, SideList::Independent)) return false;
  }
  return true;
}

bool is_chair_free_modulator(const Graph& g, const Bitset& modulator) {
  return !find_induced_chair(g, ~modulator).has_value();
}

SolveResult use_2sat(const Graph& g, const Bitset& cluster_constrained, const SolverOptions& options) {
  const int n = g.size();
  if (options.debug_checks) {
    require(is_chair_free_modulator(g, cluster_constrained), "cluster set is not a chair-free modulator");
  }
  SolveResult result;
  result.stats.nodes = 1;
  result.stats.leaves = 1;
  result.stats.use_2sat_calls = 1;
  result.stats.initial_measure = n - static_cast<int>(cluster_constrained.count());

  using Event = std::variant<PendantRemoval, MiddleDeletion>;
  std::vector<Event> events;
  std::vector<PendantRemoval> pendants;
  std::vector<signed char> side(n, kUnplaced);
  AliveSet alive(g);

  // Each round peels pendants, then either removes the middle of a bad P3 or
  // settles the remaining good graph with 2-SAT.
  while (true) {
    pendants.clear();
    peel_pendants(cluster_constrained, alive, pendants);
    for (const auto& p : pendants) events.emplace_back(p);

    InducedSubgraph sub = induced_subgraph(g, alive.members());
    Bitset local_cluster(sub.origin.size());
    for (std::size_t i = 0; i < sub.origin.size(); ++i) {
      if (cluster_constrained[sub.origin[i]]) local_cluster.set(i);
    }

    auto bad = find_c_bad_p3(sub.graph, local_cluster);
    if (!bad) {
      TwoSatResult sat = solve_2sat(build_formula(sub.graph, local_cluster));
      if (!sat.satisfiable) return result;
      for (std::size_t i = 0; i < sub.origin.size(); ++i) {
        side[sub.origin[i]] = sat.assignment[i] ? kIndependent : kCluster;
      }
      break;
    }

    const Vertex u = bad->vertices[0], v = bad->vertices[1], w = bad->vertices[2];
    if (options.debug_checks) check_deletion_claims(sub.graph, local_cluster, u, v, w);
    auto other = [&](Vertex end) {
      for (Vertex x : sub.graph.neighbors(end)) {
        if (x != v) return sub.origin[x];
      }
      return Vertex{-1};
    };
    MiddleDeletion d{sub.origin[u], sub.origin[v], sub.origin[w], other(u), other(w)};
    events.emplace_back(d);
    alive.remove(d.v);
    ++result.stats.p3_deletions;
  }

  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (const auto* p = std::get_if<PendantRemoval>(&*it)) {
      place_pendant(*p, side);
    } else {
      place_middle(std::get<MiddleDeletion>(*it), side);
    }
  }
  result.partition = partition_from_sides(side);
  if (options.debug_checks) {
    Labeling required(n);
    for (auto v = cluster_constrained.find_first(); v != Bitset::npos; v = cluster_constrained.find_next(v)) {
      required.set(static_cast<Vertex>(v), Side::Cluster);
    }
    require(verify_partition(g, *result.partition, required), "use_2sat produced an invalid partition");
  }
  return result;
}

SolveResult extend_with_modulator(const ExtensionInstance& inst, const SolverOptions& options) {
  return extend_with_modulator(inst.graph, inst.labels, options);
}

SolveResult extend_with_modulator(const Graph& g, const Labeling& labels, const SolverOptions& options) {
  auto folded = fold_independent_side(g, labels);
  SolveResult result;
  if (!folded) {
    result.stats.nodes = result.stats.leaves = 1;
    return result;
  }
  result = use_2sat(folded->instance.graph, folded->instance.labels.members(Side::Cluster), options);
  result.stats.initial_measure = labels.count(Side::Undecided);
  if (result.partition) result.partition = folded->lift(*result.partition, g.size());
  return result;
}

}  // namespace monopolar
