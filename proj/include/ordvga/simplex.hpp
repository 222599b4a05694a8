#pragma once

// Dense two-phase tableau simplex.
//
// Solves small linear programs and returns the primal point together with
// the row duals. Row duals follow the shadow-price convention of the
// problem's own sense: row_duals[i] is the rate of change of the optimal
// objective with respect to rows[i].rhs. Under that convention the dual of
//
//     max c'x  s.t.  A x (<=,=) b,  x >= 0
//
// is min b'y s.t. A'y >= c with y >= 0 on <= rows and y free on = rows, so
// the duals of an assessment program are directly the prices of its paired
// program.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ordvga::lp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };
enum class VarBound { NonNegative, Free };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status status);
const char* to_string(Relation relation);

struct Row {
  std::vector<double> coefficients;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
  std::string label;
};

struct LpProblem {
  Sense sense = Sense::Minimize;
  std::vector<double> objective;
  std::vector<Row> rows;
  // Empty means every variable is NonNegative.
  std::vector<VarBound> bounds;
  std::vector<std::string> variable_labels;

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }
  VarBound bound(std::size_t j) const {
    return bounds.empty() ? VarBound::NonNegative : bounds[j];
  }

  // Throws std::invalid_argument when row lengths or bound/label counts do
  // not match the objective length.
  void check() const;
};

// One complementary pair of the solved program. Equality rows and free
// variables carry no complementarity condition and are not listed.
struct ComplementaryPair {
  enum class Kind { Row, Variable };
  Kind kind = Kind::Row;
  std::size_t index = 0;
  // Row slack (>= 0 at feasibility) or variable value.
  double primal_side = 0.0;
  // Row dual or variable reduced cost.
  double dual_side = 0.0;
  // False when both members are numerically zero.
  bool strict = true;
};

struct LpSolution {
  Status status = Status::Infeasible;
  double objective_value = 0.0;
  // Optimal: the primal point. Unbounded: an improving ray.
  std::vector<double> primal;
  // Optimal: shadow prices. Infeasible: a Farkas-type certificate taken
  // from the phase-one duals.
  std::vector<double> row_duals;
  std::vector<double> reduced_costs;
  int iterations = 0;
  double dual_objective = 0.0;
  // Largest row or bound violation, each row scaled by its largest
  // coefficient magnitude.
  double max_primal_residual = 0.0;
  // Largest |slack * dual| over inequality rows, scaled the same way.
  double max_complementarity = 0.0;
  std::vector<ComplementaryPair> complementarity;
};

struct SolverOptions {
  double feas_tol = 1e-8;
  double pivot_tol = 1e-10;
  double gap_tol = 1e-7;
  // Reduced-cost threshold for optimality.
  double opt_tol = 1e-9;
  // Iterations without objective progress, as a multiple of
  // (rows + variables), before switching from Dantzig to Bland.
  double bland_stall_factor = 5.0;
  int max_iterations = 50000;
  // Equilibrate rows and columns before solving.
  bool scale = true;
  // Tableau dump after every pivot when non-null.
  std::ostream* trace = nullptr;
};

// Throws NumericalBreakdown when the iteration limit is hit or the final
// basis is numerically singular; std::invalid_argument when the problem is
// malformed.
LpSolution solve(const LpProblem& problem, const SolverOptions& options = {});

// Row activity a_i'x for every row.
std::vector<double> row_activities(const LpProblem& problem,
                                   const std::vector<double>& x);

}  // namespace ordvga::lp
