#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ordvga/errors.hpp"
#include "ordvga/obpt.hpp"
#include "ordvga/simplex.hpp"

namespace ordvga {
namespace {

using testing::laptops;
using testing::provinces;

const ScscEntry* entry(const StageResult& r, const std::string& id) {
  for (const auto& e : r.scsc.entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

// Virtual input and output of DMU j under plain prices, computed from the
// matrix rows directly.
std::pair<double, double> virtual_pair(const DecisionMatrix& m, const StageResult& r, std::size_t j) {
  double a = 0.0;
  double b = 0.0;
  std::size_t i = 0;
  std::size_t k = 0;
  for (std::size_t row = 0; row < m.num_metrics(); ++row) {
    if (m.metrics[row].direction == Direction::Input) {
      a += r.prices.v[i++] * m.values[row][j];
    } else {
      b += r.prices.u[k++] * m.values[row][j];
    }
  }
  return {a, b};
}

TEST(ObptTap, LaptopsShape) {
  const auto p = build_obpt_tap(laptops(), "K", 1.0);
  EXPECT_EQ(p.num_variables(), 10u);
  ASSERT_EQ(p.num_rows(), 6u);
  int eq = 0;
  int le = 0;
  for (const auto& row : p.rows) {
    eq += row.relation == lp::Relation::Equal;
    le += row.relation == lp::Relation::LessEqual;
  }
  EXPECT_EQ(eq, 4);
  EXPECT_EQ(le, 2);
  EXPECT_EQ(p.sense, lp::Sense::Maximize);
}

TEST(ObptTap, SingleDmuOptimumIsZero) {
  auto m = remove_dmus(laptops(), {"K", "A", "B", "D", "G"});
  const auto s = lp::solve(build_obpt_tap(m, "H", 1.0));
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-12);
  EXPECT_NEAR(s.primal[0], 1.0, 1e-12);
}

TEST(ObptTvg, IsFiniteAndZeroForEfficientDmu) {
  const auto k = lp::solve(build_obpt_tvg(laptops(), "K", 1.0));
  ASSERT_EQ(k.status, lp::Status::Optimal);
  EXPECT_GT(k.objective_value, 0.0);
  const auto a = lp::solve(build_obpt_tvg(laptops(), "A", 1.0));
  ASSERT_EQ(a.status, lp::Status::Optimal);
  EXPECT_NEAR(a.objective_value, 0.0, 1e-9);
}

TEST(ObptDuality, TapAndTvgOptimaAgreeOnFixtures) {
  for (const auto* m : {&laptops(), &provinces()}) {
    for (const auto& o : m->dmu_names) {
      const auto tap = lp::solve(build_obpt_tap(*m, o, 1.0));
      const auto tvg = lp::solve(build_obpt_tvg(*m, o, 1.0));
      ASSERT_EQ(tap.status, lp::Status::Optimal) << o;
      ASSERT_EQ(tvg.status, lp::Status::Optimal) << o;
      EXPECT_NEAR(tap.objective_value, tvg.objective_value, 1e-7) << o;
    }
  }
}

TEST(ObptDuality, TvgDualsReproduceTapOptimumForK) {
  // The TVG duals are an optimal adjustment vector; check it against the
  // TAP constraints and objective rather than a particular vertex.
  const auto tap_problem = build_obpt_tap(laptops(), "K", 1.0);
  const auto tap = lp::solve(tap_problem);
  const auto tvg = lp::solve(build_obpt_tvg(laptops(), "K", 1.0));
  ASSERT_EQ(tvg.status, lp::Status::Optimal);
  // TVG rows: one per DMU (pi), then one per input (q) and output (p).
  const std::vector<double>& y = tvg.row_duals;
  ASSERT_EQ(y.size(), tap_problem.num_variables());
  for (double v : y) EXPECT_GE(v, -1e-9);
  const auto act = lp::row_activities(tap_problem, y);
  for (std::size_t i = 0; i < tap_problem.num_rows(); ++i) {
    const auto& row = tap_problem.rows[i];
    if (row.relation == lp::Relation::Equal) {
      EXPECT_NEAR(act[i], row.rhs, 1e-6);
    } else {
      EXPECT_LE(act[i], row.rhs + 1e-6);
    }
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) obj += tap_problem.objective[j] * y[j];
  EXPECT_NEAR(obj, tap.objective_value, 1e-6);
  for (std::size_t j = 0; j < y.size(); ++j) EXPECT_NEAR(y[j], tap.primal[j], 1e-6) << tap_problem.variable_labels[j];
}

TEST(ObptAssess, LaptopsK) {
  const auto r = assess_obpt(laptops(), "K");
  EXPECT_NEAR(r.tau_star, 0.319, 5e-3);
  EXPECT_NEAR(r.gap_star, 0.321, 5e-3);
  EXPECT_EQ(r.peers, (std::vector<std::string>{"A", "B", "H"}));
  EXPECT_NEAR(r.targets_y[0], 2.509, 5e-3);
  EXPECT_NEAR(r.targets_x[1], 1.0, 5e-3);
  EXPECT_NEAR(r.benchmark_alpha, 0.760, 5e-3);
  EXPECT_NEAR(r.benchmark_beta, 0.760, 5e-3);
  const auto& kk = r.pairs[0];
  EXPECT_EQ(kk.dmu, "K");
  EXPECT_NEAR(kk.alpha, 1.0, 1e-7);
  EXPECT_NEAR(kk.beta, 0.679, 5e-3);
  EXPECT_EQ(r.likert_targets_y[0], 3);
  EXPECT_FALSE(r.likert_targets_y[1].has_value());
}

TEST(ObptAssess, LaptopsKComplementarity) {
  const auto r = assess_obpt(laptops(), "K");
  // The adjusted Y1 stays below the Likert ceiling, so its penalty is 0.
  const auto* ceiling = entry(r, "likert_ceiling:Y1");
  ASSERT_NE(ceiling, nullptr);
  EXPECT_GT(ceiling->left, 1.0);
  EXPECT_NEAR(r.prices.dy[0], 0.0, 1e-12);
  EXPECT_NEAR(ceiling->product, 0.0, 1e-9);
  // X2 is cut (q > 0), so its virtual price sits exactly at tau.
  const auto* goal = entry(r, "goal_price:X2");
  ASSERT_NE(goal, nullptr);
  EXPECT_GT(goal->right, 0.0);
  EXPECT_NEAR((r.prices.v[1] + r.prices.dx[1]) * 4.0, r.tau_star, 1e-9);
}

TEST(ObptAssess, LaptopsH) {
  const auto r = assess_obpt(laptops(), "H");
  EXPECT_NEAR(r.gap_star, 0.0, 1e-9);
  EXPECT_NEAR(r.tau_star, 0.829, 5e-3);
  EXPECT_NEAR(r.adjustments.pi[5], 1.0, 1e-9);
  EXPECT_EQ(r.peers, (std::vector<std::string>{"H"}));
}

TEST(ObptAssess, SingleDmuIsSelfEfficient) {
  const auto m = remove_dmus(laptops(), {"K", "A", "B", "D", "H"});
  const auto r = assess_obpt(m, "G");
  EXPECT_NEAR(r.gap_star, 0.0, 1e-12);
  EXPECT_EQ(r.peers, (std::vector<std::string>{"G"}));
  EXPECT_NEAR(r.t_bar, 1.0 / r.step1_alpha, 1e-15);
}

TEST(ObptAssess, UnknownDmuThrows) { EXPECT_THROW(assess_obpt(laptops(), "Z"), ValidationError); }

class ObptInvariants : public ::testing::TestWithParam<std::string> {};

TEST_P(ObptInvariants, HoldForEveryDmu) {
  const auto& m = GetParam() == "laptops" ? laptops() : provinces();
  for (const auto& o : m.dmu_names) {
    SCOPED_TRACE(o);
    const auto r = assess_obpt(m, o);
    const std::size_t oj = m.dmu_index(o);
    EXPECT_NEAR(r.alpha_star, 1.0, 1e-7);
    EXPECT_GE(r.gap_star, -1e-9);
    EXPECT_LT(r.gap_star, 1.0);
    EXPECT_NEAR(r.gap_star, r.alpha_star - r.beta_star, 1e-7);
    EXPECT_NEAR(r.benchmark_alpha, r.benchmark_beta, 1e-7);
    EXPECT_NEAR(r.inefficiency, r.gap_star / r.alpha_star, 1e-12);
    EXPECT_NEAR(r.efficiency, r.beta_star / r.alpha_star, 1e-12);
    EXPECT_LE(r.scsc.max_abs_product, 1e-6);
    EXPECT_GT(r.prices.tau, 0.0);
    for (double d : r.prices.dx) EXPECT_GE(d, 0.0);
    for (double d : r.prices.dy) EXPECT_GE(d, 0.0);
    for (double q : r.adjustments.q) EXPECT_GE(q, -1e-12);
    for (double p : r.adjustments.p) EXPECT_GE(p, -1e-12);

    // Targets rebuilt from intensities, Likert compliance, peers on the
    // diagonal and every virtual price at or above tau.
    std::size_t i = 0;
    std::size_t k = 0;
    for (std::size_t row = 0; row < m.num_metrics(); ++row) {
      double combo = 0.0;
      for (std::size_t j = 0; j < m.num_dmus(); ++j) combo += m.values[row][j] * r.adjustments.pi[j];
      const auto& spec = m.metrics[row];
      const double xo = m.values[row][oj];
      if (spec.direction == Direction::Input) {
        EXPECT_NEAR(combo, xo * (1.0 - r.adjustments.q[i]), 1e-7 * std::max(1.0, xo));
        EXPECT_NEAR(r.targets_x[i], xo * (1.0 - r.adjustments.q[i]), 1e-9 * std::max(1.0, xo));
        EXPECT_GE((r.prices.v[i] + r.prices.dx[i]) * xo, r.tau_star - 1e-7);
        if (spec.ordinal()) EXPECT_GE(r.targets_x[i], spec.likert->lower - 1e-9);
        ++i;
      } else {
        EXPECT_NEAR(combo, xo * (1.0 + r.adjustments.p[k]), 1e-7 * std::max(1.0, xo));
        EXPECT_GE((r.prices.u[k] + r.prices.dy[k]) * xo, r.tau_star - 1e-7);
        if (spec.ordinal()) EXPECT_LE(r.targets_y[k], spec.likert->upper + 1e-9);
        ++k;
      }
    }
    for (std::size_t j = 0; j < m.num_dmus(); ++j) {
      const bool is_peer = r.adjustments.pi[j] > 1e-9;
      EXPECT_EQ(is_peer, std::find(r.peers.begin(), r.peers.end(), m.dmu_names[j]) != r.peers.end());
      const auto [a, b] = virtual_pair(m, r, j);
      EXPECT_GE(a - b, -1e-9);
      if (j != oj) {
        EXPECT_NEAR(r.pairs[j].alpha, a, 1e-12);
        EXPECT_NEAR(r.pairs[j].beta, b, 1e-12);
      }
      if (is_peer) EXPECT_NEAR(a, b, 1e-7);
    }
    // The stored SCSC report matches an independent recomputation.
    const auto again = verify_scsc_obpt(m, r);
    EXPECT_EQ(again.entries.size(), r.scsc.entries.size());
    EXPECT_NEAR(again.max_abs_product, r.scsc.max_abs_product, 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, ObptInvariants, ::testing::Values("laptops", "provinces"));

TEST(ObptAssess, TapDualSelectionGivesSameGaps) {
  ModelOptions duals;
  duals.price_selection = PriceSelection::TapDuals;
  for (const auto& o : laptops().dmu_names) {
    const auto a = assess_obpt(laptops(), o);
    const auto b = assess_obpt(laptops(), o, duals);
    EXPECT_EQ(b.price_source, PriceSelection::TapDuals);
    EXPECT_NEAR(a.gap_star * a.step1_alpha, b.gap_star * b.step1_alpha, 1e-7) << o;
    EXPECT_NEAR(b.alpha_star, 1.0, 1e-7);
    EXPECT_LE(b.scsc.max_abs_product, 1e-6);
  }
}

TEST(ObptAssess, TightestPriceMinimisesStepOneAlpha) {
  ModelOptions duals;
  duals.price_selection = PriceSelection::TapDuals;
  for (const auto& o : provinces().dmu_names) {
    const auto a = assess_obpt(provinces(), o);
    const auto b = assess_obpt(provinces(), o, duals);
    EXPECT_LE(a.step1_alpha, b.step1_alpha + 1e-9) << o;
  }
}

}  // namespace
}  // namespace ordvga
