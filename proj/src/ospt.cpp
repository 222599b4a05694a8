#include "ordvga/ospt.hpp"

#include <algorithm>
#include <cmath>

#include "model_common.hpp"
#include "ordvga/errors.hpp"

namespace ordvga {

using detail::ModelView;

namespace {

// Indices of the top-tier DMUs other than the assessed one.
std::vector<std::size_t> peer_indices(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                                      const ModelView& mv) {
  if (top_tier.size() < 2) {
    throw SoleEfficient("stage 2 needs at least two top-tier DMUs, got " + std::to_string(top_tier.size()));
  }
  if (std::find(top_tier.begin(), top_tier.end(), matrix.dmu_names[mv.o]) == top_tier.end()) {
    throw ValidationError(ValidationCode::UnknownDmu,
                          "DMU '" + matrix.dmu_names[mv.o] + "' is not in the top tier", {}, matrix.dmu_names[mv.o]);
  }
  std::vector<std::size_t> idx;
  for (const auto& name : top_tier) {
    const std::size_t j = matrix.dmu_index(name);
    if (j != mv.o) idx.push_back(j);
  }
  return idx;
}

std::vector<double> alpha_coefficients(const ModelView& mv) {
  std::vector<double> c(mv.num_prices(), 0.0);
  for (std::size_t i = 0; i < mv.m(); ++i) c[i] = mv.xo(i);
  std::size_t k = mv.m() + mv.s();
  for (auto i : mv.ord_in) c[k++] = mv.in_bounds(i).upper - mv.xo(i);
  return c;
}

std::vector<double> beta_coefficients(const ModelView& mv) {
  std::vector<double> c(mv.num_prices(), 0.0);
  for (std::size_t r = 0; r < mv.s(); ++r) c[mv.m() + r] = mv.yo(r);
  std::size_t k = mv.m() + mv.s() + mv.ord_in.size();
  for (auto r : mv.ord_out) c[k++] = mv.out_bounds(r).lower - mv.yo(r);
  return c;
}

}  // namespace

lp::LpProblem build_ospt_tap(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                             const std::string& dmu, double tau) {
  const ModelView mv(matrix, dmu);
  const auto peers = peer_indices(matrix, top_tier, mv);
  const std::size_t np = peers.size();
  const std::size_t m = mv.m();
  const std::size_t s = mv.s();
  const std::size_t nv = np + m + s;

  lp::LpProblem p;
  p.sense = lp::Sense::Minimize;
  p.objective.assign(nv, 0.0);
  for (std::size_t k = np; k < nv; ++k) p.objective[k] = tau;
  for (auto j : peers) p.variable_labels.push_back("pi:" + matrix.dmu_names[j]);
  for (const auto& name : mv.input_names()) p.variable_labels.push_back("q:" + name);
  for (const auto& name : mv.output_names()) p.variable_labels.push_back("p:" + name);

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> a(nv, 0.0);
    for (std::size_t k = 0; k < np; ++k) a[k] = -mv.x(i, peers[k]);
    a[np + i] = mv.xo(i);
    detail::add_row(p, std::move(a), lp::Relation::GreaterEqual, -mv.xo(i), "input:" + matrix.metrics[mv.in[i]].name);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> a(nv, 0.0);
    for (std::size_t k = 0; k < np; ++k) a[k] = mv.y(r, peers[k]);
    a[np + m + r] = mv.yo(r);
    detail::add_row(p, std::move(a), lp::Relation::GreaterEqual, mv.yo(r), "output:" + matrix.metrics[mv.out[r]].name);
  }
  for (auto i : mv.ord_in) {
    std::vector<double> a(nv, 0.0);
    a[np + i] = -mv.xo(i);
    detail::add_row(p, std::move(a), lp::Relation::GreaterEqual, mv.xo(i) - mv.in_bounds(i).upper,
                    "likert_ceiling:" + matrix.metrics[mv.in[i]].name);
  }
  for (auto r : mv.ord_out) {
    std::vector<double> a(nv, 0.0);
    a[np + m + r] = -mv.yo(r);
    detail::add_row(p, std::move(a), lp::Relation::GreaterEqual, mv.out_bounds(r).lower - mv.yo(r),
                    "likert_floor:" + matrix.metrics[mv.out[r]].name);
  }
  return p;
}

lp::LpProblem build_ospt_tvg(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                             const std::string& dmu, double tau) {
  const ModelView mv(matrix, dmu);
  const auto peers = peer_indices(matrix, top_tier, mv);
  const std::size_t m = mv.m();
  const std::size_t s = mv.s();
  const std::size_t nv = mv.num_prices();

  lp::LpProblem p;
  p.sense = lp::Sense::Maximize;
  const auto a = alpha_coefficients(mv);
  const auto b = beta_coefficients(mv);
  p.objective.resize(nv);
  for (std::size_t k = 0; k < nv; ++k) p.objective[k] = b[k] - a[k];
  for (const auto& name : mv.input_names()) p.variable_labels.push_back("v:" + name);
  for (const auto& name : mv.output_names()) p.variable_labels.push_back("u:" + name);
  for (auto i : mv.ord_in) p.variable_labels.push_back("dx:" + matrix.metrics[mv.in[i]].name);
  for (auto r : mv.ord_out) p.variable_labels.push_back("dy:" + matrix.metrics[mv.out[r]].name);

  for (auto j : peers) {
    std::vector<double> row(nv, 0.0);
    for (std::size_t i = 0; i < m; ++i) row[i] = -mv.x(i, j);
    for (std::size_t r = 0; r < s; ++r) row[m + r] = mv.y(r, j);
    detail::add_row(p, std::move(row), lp::Relation::LessEqual, 0.0, "dmu:" + matrix.dmu_names[j]);
  }
  std::size_t k = m + s;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(nv, 0.0);
    row[i] = mv.xo(i);
    if (matrix.metrics[mv.in[i]].ordinal()) row[k++] = -mv.xo(i);
    detail::add_row(p, std::move(row), lp::Relation::LessEqual, tau, "goal:" + matrix.metrics[mv.in[i]].name);
  }
  for (std::size_t r = 0; r < s; ++r) {
    std::vector<double> row(nv, 0.0);
    row[m + r] = mv.yo(r);
    if (matrix.metrics[mv.out[r]].ordinal()) row[k++] = -mv.yo(r);
    detail::add_row(p, std::move(row), lp::Relation::LessEqual, tau, "goal:" + matrix.metrics[mv.out[r]].name);
  }
  return p;
}

StageResult assess_ospt(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                        const std::string& dmu, const ModelOptions& options) {
  const ModelView mv(matrix, dmu);
  const auto peers = peer_indices(matrix, top_tier, mv);
  const std::size_t np = peers.size();
  const std::size_t m = mv.m();
  const std::size_t s = mv.s();
  const auto solver = options.tolerances.solver_options();

  const auto tap = build_ospt_tap(matrix, top_tier, dmu, 1.0);
  const auto sol = lp::solve(tap, solver);
  detail::require_optimal(sol, "stage 2 adjustment program of " + dmu);

  StageResult res;
  res.dmu = dmu;
  res.stage = Stage::Super;
  res.comparison_set = top_tier;
  res.input_names = mv.input_names();
  res.output_names = mv.output_names();
  res.step1_objective = sol.objective_value;

  std::vector<double> flat(sol.row_duals.begin(), sol.row_duals.begin() + static_cast<std::ptrdiff_t>(mv.num_prices()));
  res.price_source = PriceSelection::TapDuals;
  const auto alpha_c = alpha_coefficients(mv);
  const auto beta_c = beta_coefficients(mv);
  if (options.price_selection == PriceSelection::TightestGoalPrice) {
    auto picked = detail::select_on_face(build_ospt_tvg(matrix, top_tier, dmu, 1.0), sol.objective_value, beta_c,
                                         lp::Sense::Maximize, solver);
    if (!picked.empty()) {
      flat = std::move(picked);
      res.price_source = PriceSelection::TightestGoalPrice;
    }
  }
  const double floor = options.tolerances.normalization_floor;
  if (!(detail::dot(beta_c, flat) > floor) && res.price_source == PriceSelection::TightestGoalPrice) {
    flat.assign(sol.row_duals.begin(), sol.row_duals.begin() + static_cast<std::ptrdiff_t>(mv.num_prices()));
    res.price_source = PriceSelection::TapDuals;
  }
  // Prices are nonnegative by construction; clear round-off below zero.
  for (double& w : flat) w = std::max(w, 0.0);

  res.step1_alpha = detail::dot(alpha_c, flat);
  res.step1_beta = detail::dot(beta_c, flat);
  res.step1_price_objective = res.step1_beta - res.step1_alpha;
  if (!std::isfinite(res.step1_beta)) {
    throw NumericalBreakdown("stage 2 virtual output of " + dmu + " is not finite");
  }
  if (!(res.step1_beta > floor)) {
    throw DegeneratePrices("stage 2 virtual output of " + dmu + " is not positive for any optimal price");
  }
  res.t_bar = 1.0 / res.step1_beta;
  res.tau_star = res.t_bar;
  res.gap_star = -res.t_bar * res.step1_objective;
  for (double& w : flat) w *= res.t_bar;
  res.prices = detail::unpack_prices(mv, flat, res.tau_star);
  res.alpha_star = detail::dot(alpha_c, flat);
  res.beta_star = detail::dot(beta_c, flat);

  res.adjustments.pi.assign(top_tier.size(), 0.0);
  for (std::size_t k = 0; k < np; ++k) {
    const auto pos = static_cast<std::size_t>(
        std::find(top_tier.begin(), top_tier.end(), matrix.dmu_names[peers[k]]) - top_tier.begin());
    res.adjustments.pi[pos] = sol.primal[k];
  }
  res.adjustments.q.assign(sol.primal.begin() + static_cast<std::ptrdiff_t>(np),
                           sol.primal.begin() + static_cast<std::ptrdiff_t>(np + m));
  res.adjustments.p.assign(sol.primal.begin() + static_cast<std::ptrdiff_t>(np + m),
                           sol.primal.begin() + static_cast<std::ptrdiff_t>(np + m + s));

  for (std::size_t t = 0; t < top_tier.size(); ++t) {
    const std::size_t j = matrix.dmu_index(top_tier[t]);
    VirtualPair vp{top_tier[t], 0.0, 0.0};
    if (j == mv.o) {
      vp.alpha = res.alpha_star;
      vp.beta = res.beta_star;
    } else {
      for (std::size_t i = 0; i < m; ++i) vp.alpha += res.prices.v[i] * mv.x(i, j);
      for (std::size_t r = 0; r < s; ++r) vp.beta += res.prices.u[r] * mv.y(r, j);
      if (res.adjustments.pi[t] > options.tolerances.peer_intensity) res.peers.push_back(top_tier[t]);
    }
    res.pairs.push_back(vp);
  }

  for (std::size_t i = 0; i < m; ++i) {
    res.targets_x.push_back(mv.xo(i) * (1.0 + res.adjustments.q[i]));
    res.benchmark_alpha += res.targets_x[i] * res.prices.v[i];
    double e = mv.xo(i) * res.prices.v[i];
    if (matrix.metrics[mv.in[i]].ordinal()) e += (mv.in_bounds(i).upper - mv.xo(i)) * res.prices.dx[i];
    res.metric_prices.push_back(e);
  }
  for (std::size_t r = 0; r < s; ++r) {
    res.targets_y.push_back(mv.yo(r) * (1.0 - res.adjustments.p[r]));
    res.benchmark_beta += res.targets_y[r] * res.prices.u[r];
    double e = mv.yo(r) * res.prices.u[r];
    if (matrix.metrics[mv.out[r]].ordinal()) e += (mv.out_bounds(r).lower - mv.yo(r)) * res.prices.dy[r];
    res.metric_prices.push_back(e);
  }
  detail::fill_likert_targets(mv, res);
  res.inefficiency = res.alpha_star / res.beta_star;
  res.efficiency = res.beta_star / res.alpha_star;

  res.scsc = verify_scsc_ospt(matrix, res, options.tolerances);
  if (res.scsc.max_abs_product > options.tolerances.scsc_product) {
    throw ScscViolation("stage 2 complementary slackness of " + dmu + " fails with product " +
                            std::to_string(res.scsc.max_abs_product),
                        res.scsc.max_abs_product);
  }
  return res;
}

ScscReport verify_scsc_ospt(const DecisionMatrix& matrix, const StageResult& result, const Tolerances& tolerances) {
  const ModelView mv(matrix, result.dmu);
  const auto& set = result.comparison_set;
  const auto& pi = result.adjustments.pi;
  const auto& q = result.adjustments.q;
  const auto& p = result.adjustments.p;
  const auto& pr = result.prices;
  const double zero = tolerances.strict_zero;
  std::vector<std::size_t> cols;
  for (const auto& name : set) cols.push_back(matrix.dmu_index(name));
  ScscReport rep;

  for (std::size_t i = 0; i < mv.m(); ++i) {
    double lhs = 0.0;
    for (std::size_t t = 0; t < cols.size(); ++t) lhs += mv.x(i, cols[t]) * pi[t];
    detail::push_scsc_entry(rep, "input_balance:" + result.input_names[i], lhs - mv.xo(i) * (1.0 + q[i]), pr.v[i],
                            mv.xo(i), zero);
  }
  for (std::size_t r = 0; r < mv.s(); ++r) {
    double lhs = 0.0;
    for (std::size_t t = 0; t < cols.size(); ++t) lhs += mv.y(r, cols[t]) * pi[t];
    detail::push_scsc_entry(rep, "output_balance:" + result.output_names[r], lhs - mv.yo(r) * (1.0 - p[r]), pr.u[r],
                            mv.yo(r), zero);
  }
  for (auto i : mv.ord_in) {
    detail::push_scsc_entry(rep, "likert_ceiling:" + result.input_names[i],
                            mv.in_bounds(i).upper - (1.0 + q[i]) * mv.xo(i), pr.dx[i], 1.0, zero);
  }
  for (auto r : mv.ord_out) {
    detail::push_scsc_entry(rep, "likert_floor:" + result.output_names[r],
                            (1.0 - p[r]) * mv.yo(r) - mv.out_bounds(r).lower, pr.dy[r], 1.0, zero);
  }
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (cols[t] == mv.o) continue;
    double vx = 0.0;
    double uy = 0.0;
    for (std::size_t i = 0; i < mv.m(); ++i) vx += pr.v[i] * mv.x(i, cols[t]);
    for (std::size_t r = 0; r < mv.s(); ++r) uy += pr.u[r] * mv.y(r, cols[t]);
    detail::push_scsc_entry(rep, "peer:" + set[t], vx - uy, pi[t], 1.0, zero);
  }
  for (std::size_t i = 0; i < mv.m(); ++i) {
    detail::push_scsc_entry(rep, "goal_price:" + result.input_names[i], (pr.v[i] - pr.dx[i]) * mv.xo(i) - pr.tau,
                            q[i], 1.0, zero);
  }
  for (std::size_t r = 0; r < mv.s(); ++r) {
    detail::push_scsc_entry(rep, "goal_price:" + result.output_names[r], (pr.u[r] - pr.dy[r]) * mv.yo(r) - pr.tau,
                            p[r], 1.0, zero);
  }
  return rep;
}

}  // namespace ordvga
