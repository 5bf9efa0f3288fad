#ifndef MONOPOLAR_TWOSAT_HPP
#define MONOPOLAR_TWOSAT_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "monopolar/graph.hpp"

namespace monopolar {

// A literal over variable `var`; positive means "var is true".
struct Literal {
  int var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class ClauseOrigin { ForcedCluster, Edge, PawDiamond, C4, P3, Other };

// A disjunction of one or two literals.
struct Clause {
  std::vector<Literal> literals;
  ClauseOrigin origin = ClauseOrigin::Other;

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Variables are vertex indices. Variable true means the vertex goes to the
// independent side.
class TwoSatFormula {
 public:
  explicit TwoSatFormula(int variables = 0) : variables_(variables) {}

  void add(Literal a, ClauseOrigin origin = ClauseOrigin::Other);
  void add(Literal a, Literal b, ClauseOrigin origin = ClauseOrigin::Other);

  int variable_count() const { return variables_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t count(ClauseOrigin origin) const;

  bool satisfied_by(const std::vector<bool>& assignment) const;

 private:
  int variables_;
  std::vector<Clause> clauses_;
};

struct TwoSatResult {
  bool satisfiable = false;
  std::vector<bool> assignment;  // empty unless satisfiable
};

// Emits forced-cluster, edge, paw/diamond, C4 and P3 clauses in that order.
// Does not check goodness of g; that is the caller's contract.
TwoSatFormula build_formula(const Graph& g, const Bitset& cluster_constrained);

// Implication graph + Tarjan SCC. The returned assignment is checked against
// every clause before returning.
TwoSatResult solve_2sat(const TwoSatFormula& f);

// DIMACS CNF dump: "p cnf V C", 1-based signed literals, 0-terminated lines.
void write_dimacs(std::ostream& out, const TwoSatFormula& f);

}  // namespace monopolar

#endif  // MONOPOLAR_TWOSAT_HPP
