#include "ordvga/obpt.hpp"

#include <cmath>

#include "model_common.hpp"
#include "ordvga/errors.hpp"

namespace ordvga {

using detail::ModelView;

lp::LpProblem build_obpt_tap(const DecisionMatrix& matrix, const std::string& dmu, double tau) {
  const ModelView mv(matrix, dmu);
  const std::size_t n = matrix.num_dmus();
  const std::size_t m = mv.m();
  const std::size_t s = mv.s();
  const std::size_t nv = n + m + s;

  lp::LpProblem p;
  p.sense = lp::Sense::Maximize;
  p.objective.assign(nv, 0.0);
  for (std::size_t k = n; k < nv; ++k) p.objective[k] = tau;
  for (std::size_t j = 0; j < n; ++j) p.variable_labels.push_back("pi:" + matrix.dmu_names[j]);
  for (const auto& name : mv.input_names()) p.variable_labels.push_back("q:" + name);
  for (const auto& name : mv.output_names()) p.variable_labels.push_back("p:" + name);

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> a(nv, 0.0);
    for (std::size_t j = 0; j < n; ++j) a[j] = mv.x(i, j);
    a[n + i] = mv.xo(i);
    detail::add_row(p, std::move(a), lp::Relation::Equal, mv.xo(i), "input:" + matrix.metrics[mv.in[i]].name);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> a(nv, 0.0);
    for (std::size_t j = 0; j < n; ++j) a[j] = -mv.y(r, j);
    a[n + m + r] = mv.yo(r);
    detail::add_row(p, std::move(a), lp::Relation::Equal, -mv.yo(r), "output:" + matrix.metrics[mv.out[r]].name);
  }
  for (auto i : mv.ord_in) {
    std::vector<double> a(nv, 0.0);
    a[n + i] = mv.xo(i);
    detail::add_row(p, std::move(a), lp::Relation::LessEqual, mv.xo(i) - mv.in_bounds(i).lower,
                    "likert_floor:" + matrix.metrics[mv.in[i]].name);
  }
  for (auto r : mv.ord_out) {
    std::vector<double> a(nv, 0.0);
    a[n + m + r] = mv.yo(r);
    detail::add_row(p, std::move(a), lp::Relation::LessEqual, mv.out_bounds(r).upper - mv.yo(r),
                    "likert_ceiling:" + matrix.metrics[mv.out[r]].name);
  }
  return p;
}

namespace {

// Price-variable coefficients of alpha and beta for stage 1.
std::vector<double> alpha_coefficients(const ModelView& mv) {
  std::vector<double> c(mv.num_prices(), 0.0);
  for (std::size_t i = 0; i < mv.m(); ++i) c[i] = mv.xo(i);
  std::size_t k = mv.m() + mv.s();
  for (auto i : mv.ord_in) c[k++] = mv.xo(i) - mv.in_bounds(i).lower;
  return c;
}

std::vector<double> beta_coefficients(const ModelView& mv) {
  std::vector<double> c(mv.num_prices(), 0.0);
  for (std::size_t r = 0; r < mv.s(); ++r) c[mv.m() + r] = mv.yo(r);
  std::size_t k = mv.m() + mv.s() + mv.ord_in.size();
  for (auto r : mv.ord_out) c[k++] = mv.yo(r) - mv.out_bounds(r).upper;
  return c;
}

}  // namespace

lp::LpProblem build_obpt_tvg(const DecisionMatrix& matrix, const std::string& dmu, double tau) {
  const ModelView mv(matrix, dmu);
  const std::size_t n = matrix.num_dmus();
  const std::size_t m = mv.m();
  const std::size_t s = mv.s();
  const std::size_t nv = mv.num_prices();

  lp::LpProblem p;
  p.sense = lp::Sense::Minimize;
  const auto a = alpha_coefficients(mv);
  const auto b = beta_coefficients(mv);
  p.objective.resize(nv);
  for (std::size_t k = 0; k < nv; ++k) p.objective[k] = a[k] - b[k];
  p.bounds.assign(nv, lp::VarBound::NonNegative);
  for (std::size_t k = 0; k < m + s; ++k) p.bounds[k] = lp::VarBound::Free;
  for (const auto& name : mv.input_names()) p.variable_labels.push_back("v:" + name);
  for (const auto& name : mv.output_names()) p.variable_labels.push_back("u:" + name);
  for (auto i : mv.ord_in) p.variable_labels.push_back("dx:" + matrix.metrics[mv.in[i]].name);
  for (auto r : mv.ord_out) p.variable_labels.push_back("dy:" + matrix.metrics[mv.out[r]].name);

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(nv, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = mv.x(i, j);
    for (std::size_t r = 0; r < s; ++r) row[m + r] = -mv.y(r, j);
    detail::add_row(p, std::move(row), lp::Relation::GreaterEqual, 0.0, "dmu:" + matrix.dmu_names[j]);
  }
  std::size_t k = m + s;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(nv, 0.0);
    row[i] = mv.xo(i);
    if (matrix.metrics[mv.in[i]].ordinal()) row[k++] = mv.xo(i);
    detail::add_row(p, std::move(row), lp::Relation::GreaterEqual, tau, "goal:" + matrix.metrics[mv.in[i]].name);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(nv, 0.0);
    row[m + r] = mv.yo(r);
    if (matrix.metrics[mv.out[r]].ordinal()) row[k++] = mv.yo(r);
    detail::add_row(p, std::move(row), lp::Relation::GreaterEqual, tau, "goal:" + matrix.metrics[mv.out[r]].name);
  }
  return p;
}

StageResult assess_obpt(const DecisionMatrix& matrix, const std::string& dmu, const ModelOptions& options) {
  const ModelView mv(matrix, dmu);
  const std::size_t n = matrix.num_dmus();
  const std::size_t m = mv.m();
  const std::size_t s = mv.s();
  const auto solver = options.tolerances.solver_options();

  const auto tap = build_obpt_tap(matrix, dmu, 1.0);
  const auto sol = lp::solve(tap, solver);
  detail::require_optimal(sol, "stage 1 adjustment program of " + dmu);

  StageResult res;
  res.dmu = dmu;
  res.stage = Stage::BestPractice;
  res.comparison_set = matrix.dmu_names;
  res.input_names = mv.input_names();
  res.output_names = mv.output_names();
  res.step1_objective = sol.objective_value;

  std::vector<double> flat(sol.row_duals.begin(), sol.row_duals.begin() + static_cast<std::ptrdiff_t>(mv.num_prices()));
  res.price_source = PriceSelection::TapDuals;
  const auto alpha_c = alpha_coefficients(mv);
  const auto beta_c = beta_coefficients(mv);
  if (options.price_selection == PriceSelection::TightestGoalPrice) {
    // The face is searched with a nonnegative virtual output first, then
    // with nonnegative v and u dropped as well.
    auto price_program = build_obpt_tvg(matrix, dmu, 1.0);
    detail::add_row(price_program, beta_c, lp::Relation::GreaterEqual, 0.0, "virtual_output");
    auto signed_program = price_program;
    signed_program.bounds.assign(signed_program.bounds.size(), lp::VarBound::NonNegative);
    auto picked = detail::select_on_face(signed_program, sol.objective_value, alpha_c, lp::Sense::Minimize, solver);
    if (picked.empty()) {
      picked = detail::select_on_face(price_program, sol.objective_value, alpha_c, lp::Sense::Minimize, solver);
    }
    if (!picked.empty()) {
      flat = std::move(picked);
      res.price_source = PriceSelection::TightestGoalPrice;
    }
  }

  const double floor = options.tolerances.normalization_floor;
  if (!(detail::dot(alpha_c, flat) > floor)) {
    // Largest virtual input on the face, capped at $1 because the face is
    // a cone when the optimum is zero.
    auto capped = build_obpt_tvg(matrix, dmu, 1.0);
    detail::add_row(capped, alpha_c, lp::Relation::LessEqual, 1.0, "alpha_cap");
    auto widest = detail::select_on_face(capped, sol.objective_value, alpha_c, lp::Sense::Maximize, solver);
    if (!widest.empty() && detail::dot(alpha_c, widest) > floor) {
      flat = std::move(widest);
      res.price_source = PriceSelection::TightestGoalPrice;
    }
  }
  res.step1_alpha = detail::dot(alpha_c, flat);
  res.step1_beta = detail::dot(beta_c, flat);
  res.step1_price_objective = res.step1_alpha - res.step1_beta;
  if (!std::isfinite(res.step1_alpha)) {
    throw NumericalBreakdown("stage 1 virtual input of " + dmu + " is not finite");
  }
  if (!(res.step1_alpha > floor)) {
    throw DegeneratePrices("stage 1 virtual input of " + dmu + " is not positive for any optimal price");
  }
  res.t_bar = 1.0 / res.step1_alpha;
  res.tau_star = res.t_bar;
  res.gap_star = res.t_bar * res.step1_objective;
  for (double& w : flat) w *= res.t_bar;
  res.prices = detail::unpack_prices(mv, flat, res.tau_star);
  res.alpha_star = detail::dot(alpha_c, flat);
  res.beta_star = detail::dot(beta_c, flat);

  res.adjustments.pi.assign(sol.primal.begin(), sol.primal.begin() + static_cast<std::ptrdiff_t>(n));
  res.adjustments.q.assign(sol.primal.begin() + static_cast<std::ptrdiff_t>(n),
                           sol.primal.begin() + static_cast<std::ptrdiff_t>(n + m));
  res.adjustments.p.assign(sol.primal.begin() + static_cast<std::ptrdiff_t>(n + m),
                           sol.primal.begin() + static_cast<std::ptrdiff_t>(n + m + s));

  for (std::size_t j = 0; j < n; ++j) {
    VirtualPair vp{matrix.dmu_names[j], 0.0, 0.0};
    if (j == mv.o) {
      vp.alpha = res.alpha_star;
      vp.beta = res.beta_star;
    } else {
      for (std::size_t i = 0; i < m; ++i) vp.alpha += res.prices.v[i] * mv.x(i, j);
      for (std::size_t r = 0; r < s; ++r) vp.beta += res.prices.u[r] * mv.y(r, j);
    }
    res.pairs.push_back(vp);
    if (res.adjustments.pi[j] > options.tolerances.peer_intensity) res.peers.push_back(matrix.dmu_names[j]);
  }

  for (std::size_t i = 0; i < m; ++i) {
    res.targets_x.push_back(mv.xo(i) * (1.0 - res.adjustments.q[i]));
    res.benchmark_alpha += res.targets_x[i] * res.prices.v[i];
    double e = mv.xo(i) * res.prices.v[i];
    if (matrix.metrics[mv.in[i]].ordinal()) e += (mv.xo(i) - mv.in_bounds(i).lower) * res.prices.dx[i];
    res.metric_prices.push_back(e);
  }
  for (std::size_t r = 0; r < s; ++r) {
    res.targets_y.push_back(mv.yo(r) * (1.0 + res.adjustments.p[r]));
    res.benchmark_beta += res.targets_y[r] * res.prices.u[r];
  }
  for (std::size_t r = 0; r < s; ++r) {
    double e = mv.yo(r) * res.prices.u[r];
    if (matrix.metrics[mv.out[r]].ordinal()) e += (mv.yo(r) - mv.out_bounds(r).upper) * res.prices.dy[r];
    res.metric_prices.push_back(e);
  }
  detail::fill_likert_targets(mv, res);
  res.inefficiency = res.gap_star / res.alpha_star;
  res.efficiency = res.beta_star / res.alpha_star;

  res.scsc = verify_scsc_obpt(matrix, res, options.tolerances);
  if (res.scsc.max_abs_product > options.tolerances.scsc_product) {
    throw ScscViolation("stage 1 complementary slackness of " + dmu + " fails with product " +
                            std::to_string(res.scsc.max_abs_product),
                        res.scsc.max_abs_product);
  }
  return res;
}

ScscReport verify_scsc_obpt(const DecisionMatrix& matrix, const StageResult& result, const Tolerances& tolerances) {
  const ModelView mv(matrix, result.dmu);
  const std::size_t n = matrix.num_dmus();
  const auto& pi = result.adjustments.pi;
  const auto& q = result.adjustments.q;
  const auto& p = result.adjustments.p;
  const auto& pr = result.prices;
  const double zero = tolerances.strict_zero;
  ScscReport rep;

  for (std::size_t i = 0; i < mv.m(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) lhs += mv.x(i, j) * pi[j];
    detail::push_scsc_entry(rep, "input_balance:" + result.input_names[i], lhs - mv.xo(i) * (1.0 - q[i]), pr.v[i], mv.xo(i), zero);
  }
  for (std::size_t r = 0; r < mv.s(); ++r) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < n; ++j) lhs += mv.y(r, j) * pi[j];
    detail::push_scsc_entry(rep, "output_balance:" + result.output_names[r], lhs - mv.yo(r) * (1.0 + p[r]), pr.u[r], mv.yo(r), zero);
  }
  for (auto i : mv.ord_in) {
    detail::push_scsc_entry(rep, "likert_floor:" + result.input_names[i], (1.0 - q[i]) * mv.xo(i) - mv.in_bounds(i).lower,
               pr.dx[i], 1.0, zero);
  }
  for (auto r : mv.ord_out) {
    detail::push_scsc_entry(rep, "likert_ceiling:" + result.output_names[r], mv.out_bounds(r).upper - (1.0 + p[r]) * mv.yo(r),
               pr.dy[r], 1.0, zero);
  }
  for (std::size_t j = 0; j < n; ++j) {
    double vx = 0.0;
    double uy = 0.0;
    for (std::size_t i = 0; i < mv.m(); ++i) vx += pr.v[i] * mv.x(i, j);
    for (std::size_t r = 0; r < mv.s(); ++r) uy += pr.u[r] * mv.y(r, j);
    detail::push_scsc_entry(rep, "peer:" + matrix.dmu_names[j], vx - uy, pi[j], 1.0, zero);
  }
  for (std::size_t i = 0; i < mv.m(); ++i) {
    detail::push_scsc_entry(rep, "goal_price:" + result.input_names[i], (pr.v[i] + pr.dx[i]) * mv.xo(i) - pr.tau, q[i], 1.0, zero);
  }
  for (std::size_t r = 0; r < mv.s(); ++r) {
    detail::push_scsc_entry(rep, "goal_price:" + result.output_names[r], (pr.u[r] + pr.dy[r]) * mv.yo(r) - pr.tau, p[r], 1.0, zero);
  }
  return rep;
}

}  // namespace ordvga
