#include "monopolar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace monopolar::oracle {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

struct Adjacency {
  int n = 0;
  std::vector<Mask> rows;

  explicit Adjacency(const Graph& g) : n(g.size()), rows(g.size(), 0) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && g.adjacent(u, v)) rows[u] |= bit(v);
      }
    }
  }

  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }

  bool independent(Mask s) const {
    for (Mask rest = s; rest; rest &= rest - 1) {
      if (rows[std::countr_zero(rest)] & s) return false;
    }
    return true;
  }

  // No induced P3 inside s: adjacent vertices share closed neighbourhoods.
  bool cluster(Mask s) const {
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask closed_v = (rows[v] & s) | bit(v);
      for (Mask nb = rows[v] & s; nb; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        if (((rows[u] & s) | bit(u)) != closed_v) return false;
      }
    }
    return true;
  }

  int edges_inside(Mask s) const {
    int twice = 0;
    for (Mask rest = s; rest; rest &= rest - 1) twice += std::popcount(rows[std::countr_zero(rest)] & s);
    return twice / 2;
  }

  std::vector<int> degrees_inside(Mask s) const {
    std::vector<int> d;
    for (Mask rest = s; rest; rest &= rest - 1) d.push_back(std::popcount(rows[std::countr_zero(rest)] & s));
    std::sort(d.begin(), d.end());
    return d;
  }
};

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw Refusal(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  }
}

MonopolarPartition partition_of(int n, Mask independent) {
  std::vector<bool> in(n);
  for (int v = 0; v < n; ++v) in[v] = (independent >> v) & 1U;
  return MonopolarPartition::from_membership(in);
}

// All vertex subsets of the given size, as masks.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask s = bit(k) - 1;
  const Mask limit = bit(n);
  while (s < limit) {
    f(s);
    const Mask low = s & -s;
    const Mask ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
}

// A 5-vertex graph with degree sequence 3,2,1,1,1 is necessarily a chair.
std::vector<Mask> all_chairs(const Adjacency& adj) {
  std::vector<Mask> chairs;
  static const std::vector<int> chair_degrees{1, 1, 1, 2, 3};
  for_each_subset_of_size(adj.n, 5, [&](Mask s) {
    if (adj.edges_inside(s) == 4 && adj.degrees_inside(s) == chair_degrees) chairs.push_back(s);
  });
  return chairs;
}

// A 4-vertex graph with degree sequence 3,1,1,1 is a claw.
std::vector<Mask> all_claws(const Adjacency& adj) {
  std::vector<Mask> claws;
  static const std::vector<int> claw_degrees{1, 1, 1, 3};
  for_each_subset_of_size(adj.n, 4, [&](Mask s) {
    if (adj.degrees_inside(s) == claw_degrees) claws.push_back(s);
  });
  return claws;
}

bool hits_all(const std::vector<Mask>& targets, Mask s) {
  return std::all_of(targets.begin(), targets.end(), [&](Mask t) { return (t & s) != 0; });
}

std::vector<Vertex> members(Mask s) {
  std::vector<Vertex> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

void bron_kerbosch(const std::vector<Mask>& compl_rows, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (Mask px = p | x; px; px &= px - 1) {
    const int u = std::countr_zero(px);
    const int score = std::popcount(p & compl_rows[u]);
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (Mask candidates = p & ~compl_rows[pivot]; candidates; candidates &= candidates - 1) {
    const int v = std::countr_zero(candidates);
    bron_kerbosch(compl_rows, r | bit(v), p & compl_rows[v], x & compl_rows[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

Report brute_force_extension(const Graph& g, const Labeling& labels, bool collect_all, const Limits& limits) {
  check_cap(g.size(), std::min(limits.extension_cap, 63), "brute_force_extension");
  if (labels.size() != g.size()) throw InvalidInput("labelling size does not match the graph");
  const Adjacency adj(g);
  Mask forced_independent = 0;
  std::vector<int> free;
  for (int v = 0; v < adj.n; ++v) {
    if (labels[v] == Side::Independent) forced_independent |= bit(v);
    if (labels[v] == Side::Undecided) free.push_back(v);
  }
  Report report;
  const Mask completions = Mask{1} << free.size();
  for (Mask choice = 0; choice < completions; ++choice) {
    ++report.examined;
    Mask independent = forced_independent;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((choice >> i) & 1U) independent |= bit(free[i]);
    }
    if (!adj.independent(independent) || !adj.cluster(adj.all() & ~independent)) continue;
    report.yes = true;
    report.witnesses.push_back(partition_of(adj.n, independent));
    if (!collect_all) break;
  }
  return report;
}

std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g, const Limits& limits) {
  check_cap(g.size(), std::min(limits.mis_cap, 63), "maximal_independent_sets");
  const Adjacency adj(g);
  std::vector<Mask> compl_rows(adj.n);
  for (int v = 0; v < adj.n; ++v) compl_rows[v] = adj.all() & ~adj.rows[v] & ~bit(v);
  std::vector<Mask> sets;
  bron_kerbosch(compl_rows, 0, adj.all(), 0, sets);
  std::vector<std::vector<Vertex>> out;
  out.reserve(sets.size());
  for (Mask s : sets) out.push_back(members(s));
  return out;
}

SolveResult mis_recognize(const Graph& g, const Limits& limits) {
  const Adjacency adj(g);
  SolveResult result;
  for (const auto& set : maximal_independent_sets(g, limits)) {
    ++result.stats.nodes;
    Mask independent = 0;
    for (Vertex v : set) independent |= bit(v);
    if (adj.cluster(adj.all() & ~independent)) {
      result.partition = partition_of(adj.n, independent);
      break;
    }
  }
  return result;
}

std::vector<std::vector<Vertex>> minimal_chair_modulators(const Graph& g, const Limits& limits) {
  check_cap(g.size(), std::min(limits.modulator_cap, 20), "minimal_chair_modulators");
  const Adjacency adj(g);
  const auto chairs = all_chairs(adj);
  std::vector<std::vector<Vertex>> out;
  for (int k = 0; k <= adj.n; ++k) {
    for_each_subset_of_size(adj.n, k, [&](Mask s) {
      if (!hits_all(chairs, s)) return;
      for (Mask rest = s; rest; rest &= rest - 1) {
        if (hits_all(chairs, s & ~(rest & -rest))) return;
      }
      out.push_back(members(s));
    });
  }
  return out;
}

int min_claw_vertex_modulator_size(const Graph& g, const Limits& limits) {
  check_cap(g.size(), std::min(limits.modulator_cap, 20), "min_claw_vertex_modulator_size");
  const Adjacency adj(g);
  const auto claws = all_claws(adj);
  for (int k = 0; k <= adj.n; ++k) {
    bool found = false;
    for_each_subset_of_size(adj.n, k, [&](Mask s) { found = found || hits_all(claws, s); });
    if (found) return k;
  }
  return adj.n;
}

int min_claw_edge_modulator_size(const Graph& g, int max_edges) {
  const std::vector<Edge> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > std::min(max_edges, 63)) {
    throw Refusal("min_claw_edge_modulator_size: " + std::to_string(m) + " edges exceeds cap");
  }
  const Adjacency adj(g);
  auto edge_index = [&](int a, int b) {
    const Edge e(a, b);
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  // Each claw, as the mask of its three centre-leaf edges.
  std::vector<Mask> claws;
  for (Mask s : all_claws(adj)) {
    int centre = -1;
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(adj.rows[v] & s) == 3) centre = v;
    }
    Mask edge_mask = 0;
    for (Mask leaves = s & ~bit(centre); leaves; leaves &= leaves - 1) {
      edge_mask |= bit(edge_index(centre, std::countr_zero(leaves)));
    }
    claws.push_back(edge_mask);
  }
  for (int k = 0; k <= m; ++k) {
    bool found = false;
    for_each_subset_of_size(m, k, [&](Mask s) { found = found || hits_all(claws, s); });
    if (found) return k;
  }
  return m;
}

}  // namespace monopolar::oracle
