#include "monopolar/twosat.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "monopolar/patterns.hpp"

namespace monopolar {

void TwoSatFormula::add(Literal a, ClauseOrigin origin) {
  if (a.var < 0 || a.var >= variables_) throw InvalidInput("literal variable out of range");
  clauses_.push_back({{a}, origin});
}

void TwoSatFormula::add(Literal a, Literal b, ClauseOrigin origin) {
  if (a.var < 0 || a.var >= variables_ || b.var < 0 || b.var >= variables_) {
    throw InvalidInput("literal variable out of range");
  }
  clauses_.push_back({{a, b}, origin});
}

std::size_t TwoSatFormula::count(ClauseOrigin origin) const {
  return static_cast<std::size_t>(
      std::count_if(clauses_.begin(), clauses_.end(), [&](const Clause& c) { return c.origin == origin; }));
}

bool TwoSatFormula::satisfied_by(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != variables_) return false;
  return std::all_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return std::any_of(c.literals.begin(), c.literals.end(),
                       [&](const Literal& l) { return assignment[l.var] == l.positive; });
  });
}

TwoSatFormula build_formula(const Graph& g, const Bitset& cluster_constrained) {
  TwoSatFormula f(g.size());
  for (auto u = cluster_constrained.find_first(); u != Bitset::npos; u = cluster_constrained.find_next(u)) {
    f.add(Literal{static_cast<int>(u), false}, ClauseOrigin::ForcedCluster);
  }
  for (const Edge& e : g.edges()) f.add(Literal{e.u, false}, Literal{e.v, false}, ClauseOrigin::Edge);

  for (const PatternWitness& p : enumerate_constraint_patterns(g)) {
    const auto& t = p.vertices;
    if (p.kind == PatternKind::C4) {
      for (int i = 0; i < 4; ++i) f.add(Literal{t[i], true}, Literal{t[(i + 1) % 4], true}, ClauseOrigin::C4);
    } else {
      f.add(Literal{t[0], true}, Literal{t[1], true}, ClauseOrigin::PawDiamond);
    }
  }

  // A constrained vertex on an induced P3 keeps at most one of the other two
  // vertices on the cluster side.
  if (cluster_constrained.any()) {
    for (const PatternWitness& p : enumerate_induced_p3s(g)) {
      const auto& t = p.vertices;
      for (int i = 0; i < 3; ++i) {
        if (!cluster_constrained[t[i]]) continue;
        Vertex a = t[(i + 1) % 3], b = t[(i + 2) % 3];
        if (a > b) std::swap(a, b);
        f.add(Literal{a, true}, Literal{b, true}, ClauseOrigin::P3);
      }
    }
  }
  return f;
}

namespace {

// Literal node index in the implication graph.
int node(const Literal& l) { return 2 * l.var + (l.positive ? 0 : 1); }

}  // namespace

TwoSatResult solve_2sat(const TwoSatFormula& f) {
  const int nodes = 2 * f.variable_count();
  std::vector<std::vector<int>> implications(nodes);
  for (const Clause& c : f.clauses()) {
    const Literal a = c.literals[0];
    const Literal b = c.literals.size() > 1 ? c.literals[1] : c.literals[0];
    implications[node(!a)].push_back(node(b));
    implications[node(!b)].push_back(node(a));
  }

  // Iterative Tarjan. Components are numbered in the order they complete,
  // which is a reverse topological order of the condensation.
  std::vector<int> index(nodes, -1), low(nodes, 0), component(nodes, -1);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;
  int next_index = 0, components = 0;
  // Negative literals are tried as roots first, so a variable the formula
  // leaves free comes out false (cluster side).
  for (int r = 0; r < nodes; ++r) {
    const int root = r < nodes / 2 ? 2 * r + 1 : 2 * (r - nodes / 2);
    if (index[root] >= 0) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < implications[v].size()) {
        const int w = implications[v][edge++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          frames.emplace_back(w, 0);
        } else if (component[w] < 0) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          component[w] = components;
        } while (w != v);
        ++components;
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  TwoSatResult result;
  for (int x = 0; x < f.variable_count(); ++x) {
    if (component[2 * x] == component[2 * x + 1]) return result;
  }
  result.satisfiable = true;
  result.assignment.resize(f.variable_count());
  for (int x = 0; x < f.variable_count(); ++x) {
    // Pick the literal whose component comes later topologically.
    result.assignment[x] = component[2 * x] < component[2 * x + 1];
  }
  if (!f.satisfied_by(result.assignment)) throw std::logic_error("2-SAT assignment fails its own formula");
  return result;
}

void write_dimacs(std::ostream& out, const TwoSatFormula& f) {
  out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c.literals) out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
}

}  // namespace monopolar
