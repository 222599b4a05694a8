#include "model_common.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ordvga/errors.hpp"

namespace ordvga {

const char* to_string(Stage stage) {
  return stage == Stage::BestPractice ? "best_practice" : "super";
}

const char* to_string(PriceSelection selection) {
  return selection == PriceSelection::TightestGoalPrice ? "tightest_goal_price" : "tap_duals";
}

namespace detail {

ModelView::ModelView(const DecisionMatrix& mat, const std::string& dmu)
    : matrix(mat), o(mat.dmu_index(dmu)), in(mat.inputs()), out(mat.outputs()) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (matrix.metrics[in[i]].ordinal()) ord_in.push_back(i);
  }
  for (std::size_t r = 0; r < out.size(); ++r) {
    if (matrix.metrics[out[r]].ordinal()) ord_out.push_back(r);
  }
}

std::vector<std::string> ModelView::input_names() const {
  std::vector<std::string> names;
  for (auto k : in) names.push_back(matrix.metrics[k].name);
  return names;
}

std::vector<std::string> ModelView::output_names() const {
  std::vector<std::string> names;
  for (auto k : out) names.push_back(matrix.metrics[k].name);
  return names;
}

PriceVector unpack_prices(const ModelView& view, const std::vector<double>& flat, double tau) {
  PriceVector pv;
  pv.tau = tau;
  const std::size_t m = view.m();
  const std::size_t s = view.s();
  pv.v.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(m));
  pv.u.assign(flat.begin() + static_cast<std::ptrdiff_t>(m),
              flat.begin() + static_cast<std::ptrdiff_t>(m + s));
  pv.dx.assign(m, 0.0);
  pv.dy.assign(s, 0.0);
  std::size_t k = m + s;
  for (auto i : view.ord_in) pv.dx[i] = flat[k++];
  for (auto r : view.ord_out) pv.dy[r] = flat[k++];
  return pv;
}

void add_row(lp::LpProblem& problem, std::vector<double> coefficients, lp::Relation relation,
             double rhs, std::string label) {
  lp::Row row;
  row.coefficients = std::move(coefficients);
  row.relation = relation;
  row.rhs = rhs;
  row.label = std::move(label);
  problem.rows.push_back(std::move(row));
}

std::vector<double> select_on_face(lp::LpProblem price_program, double optimum,
                                   const std::vector<double>& selection_objective,
                                   lp::Sense selection_sense, const lp::SolverOptions& options) {
  const double slack = 1e-11 * (1.0 + std::abs(optimum));
  if (price_program.sense == lp::Sense::Minimize) {
    add_row(price_program, price_program.objective, lp::Relation::LessEqual, optimum + slack, "face");
  } else {
    add_row(price_program, price_program.objective, lp::Relation::GreaterEqual, optimum - slack, "face");
  }
  price_program.objective = selection_objective;
  price_program.sense = selection_sense;
  lp::LpSolution sol;
  try {
    sol = lp::solve(price_program, options);
  } catch (const NumericalBreakdown&) {
    return {};
  }
  if (sol.status != lp::Status::Optimal) return {};
  return sol.primal;
}

void require_optimal(const lp::LpSolution& solution, const std::string& what) {
  if (solution.status != lp::Status::Optimal) {
    throw SolverFailure(what + " is " + lp::to_string(solution.status));
  }
}

void push_scsc_entry(ScscReport& report, std::string id, double left, double right,
                     double scale, double zero) {
  ScscEntry e;
  e.id = std::move(id);
  e.left = left;
  e.right = right;
  e.product = left * right;
  e.strict = !(std::abs(left / scale) <= zero && std::abs(right * scale) <= zero);
  report.max_abs_product = std::max(report.max_abs_product, std::abs(e.product));
  report.entries.push_back(std::move(e));
}

void fill_likert_targets(const ModelView& view, StageResult& result) {
  const auto nearest = [](double t, const LikertBounds& b) {
    return std::clamp(static_cast<int>(std::lround(t)), b.lower, b.upper);
  };
  result.likert_targets_x.assign(view.m(), std::nullopt);
  result.likert_targets_y.assign(view.s(), std::nullopt);
  for (auto i : view.ord_in) result.likert_targets_x[i] = nearest(result.targets_x[i], view.in_bounds(i));
  for (auto r : view.ord_out) result.likert_targets_y[r] = nearest(result.targets_y[r], view.out_bounds(r));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace detail
}  // namespace ordvga
