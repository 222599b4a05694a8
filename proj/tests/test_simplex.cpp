#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "lp_oracle.hpp"
#include "ordvga/errors.hpp"
#include "ordvga/simplex.hpp"

namespace ordvga {
namespace {

using lp::LpProblem;
using lp::Relation;
using lp::Sense;
using lp::Status;
using lp::VarBound;

// Checks primal feasibility, dual sign conventions, reduced costs and
// strong duality straight from the problem data.
void expect_certified_optimum(const LpProblem& p, const lp::LpSolution& s) {
  const double sign = p.sense == Sense::Minimize ? 1.0 : -1.0;
  const auto act = lp::row_activities(p, s.primal);
  double by = 0.0;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& row = p.rows[i];
    const double y = s.row_duals[i];
    by += row.rhs * y;
    const double scale = 1.0 + std::fabs(row.rhs);
    if (row.relation == Relation::LessEqual) {
      EXPECT_LE(act[i], row.rhs + 1e-7 * scale);
      EXPECT_LE(sign * y, 1e-9);
    } else if (row.relation == Relation::GreaterEqual) {
      EXPECT_GE(act[i], row.rhs - 1e-7 * scale);
      EXPECT_GE(sign * y, -1e-9);
    } else {
      EXPECT_NEAR(act[i], row.rhs, 1e-7 * scale);
    }
    EXPECT_LE(std::fabs((act[i] - row.rhs) * y), 1e-7 * scale);
  }
  for (std::size_t j = 0; j < p.num_variables(); ++j) {
    double d = p.objective[j];
    for (std::size_t i = 0; i < p.rows.size(); ++i) d -= p.rows[i].coefficients[j] * s.row_duals[i];
    if (p.bound(j) == VarBound::Free) {
      EXPECT_NEAR(d, 0.0, 1e-7);
    } else {
      EXPECT_GE(s.primal[j], -1e-9);
      EXPECT_GE(sign * d, -1e-7);
      EXPECT_LE(std::fabs(d * s.primal[j]), 1e-7 * (1.0 + std::fabs(s.primal[j])));
    }
  }
  EXPECT_NEAR(by, s.objective_value, 1e-7 * (1.0 + std::fabs(s.objective_value)));
}

TEST(Simplex, MaximiseSingleVariable) {
  LpProblem p;
  p.sense = Sense::Maximize;
  p.objective = {1.0};
  p.rows = {{{1.0}, Relation::LessEqual, 1.0, "cap"}};
  const auto s = lp::solve(p);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.objective_value, 1.0, 1e-12);
  EXPECT_NEAR(s.row_duals[0], 1.0, 1e-12);
}

TEST(Simplex, EmptyFeasibleSetIsInfeasible) {
  LpProblem p;
  p.objective = {0.0};
  p.rows = {{{1.0}, Relation::GreaterEqual, 1.0, ""}, {{1.0}, Relation::LessEqual, 0.0, ""}};
  const auto s = lp::solve(p);
  EXPECT_EQ(s.status, Status::Infeasible);
  EXPECT_EQ(s.row_duals.size(), 2u);
}

TEST(Simplex, UnboundedReturnsImprovingRay) {
  LpProblem p;
  p.sense = Sense::Maximize;
  p.objective = {1.0, 1.0};
  p.rows = {{{1.0, -1.0}, Relation::LessEqual, 1.0, ""}};
  const auto s = lp::solve(p);
  ASSERT_EQ(s.status, Status::Unbounded);
  ASSERT_EQ(s.primal.size(), 2u);
  EXPECT_GT(s.primal[0] + s.primal[1], 0.0);
  EXPECT_LE(s.primal[0] - s.primal[1], 1e-12);
  EXPECT_GE(s.primal[0], -1e-12);
  EXPECT_GE(s.primal[1], -1e-12);
}

TEST(Simplex, FreeVariableTakesNegativeValue) {
  LpProblem p;
  p.objective = {1.0, 0.0};
  p.bounds = {VarBound::Free, VarBound::NonNegative};
  p.rows = {{{1.0, 1.0}, Relation::GreaterEqual, -3.0, ""}, {{0.0, 1.0}, Relation::LessEqual, 2.0, ""}};
  const auto s = lp::solve(p);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.objective_value, -5.0, 1e-10);
  EXPECT_NEAR(s.primal[0], -5.0, 1e-10);
  expect_certified_optimum(p, s);
}

TEST(Simplex, MismatchedRowLengthIsRejected) {
  LpProblem p;
  p.objective = {1.0, 1.0};
  p.rows = {{{1.0}, Relation::LessEqual, 1.0, ""}};
  EXPECT_THROW(lp::solve(p), std::invalid_argument);
}

LpProblem beale() { return testing::beale_cycling_lp(); }

TEST(Simplex, BealeCyclingExampleTerminates) {
  for (bool scale : {true, false}) {
    lp::SolverOptions opt;
    opt.scale = scale;
    const auto s = lp::solve(beale(), opt);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.objective_value, -1.25, 1e-9);
    expect_certified_optimum(beale(), s);
  }
}

TEST(Simplex, BealeTerminatesWithImmediateBland) {
  lp::SolverOptions opt;
  opt.scale = false;
  opt.bland_stall_factor = 0.0;
  const auto s = lp::solve(beale(), opt);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_NEAR(s.objective_value, -1.25, 1e-9);
}

TEST(Simplex, KuhnDegenerateExampleTerminates) {
  // Kuhn's cycling example for the largest-coefficient rule.
  LpProblem p;
  p.objective = {-2.0, -3.0, 1.0, 12.0};
  p.rows = {{{-2.0, -9.0, 1.0, 9.0}, Relation::LessEqual, 0.0, ""},
            {{1.0 / 3.0, 1.0, -1.0 / 3.0, -2.0}, Relation::LessEqual, 0.0, ""},
            {{2.0, 3.0, -1.0, -12.0}, Relation::LessEqual, 2.0, ""}};
  lp::SolverOptions opt;
  opt.scale = false;
  const auto s = lp::solve(p, opt);
  const auto o = testing::enumerate_vertices(p);
  ASSERT_EQ(s.status, o.status);
  if (s.status == Status::Optimal) EXPECT_NEAR(s.objective_value, o.objective, 1e-7);
}

TEST(Simplex, DeterministicAcrossCalls) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto p = testing::random_small_lp(rng, true);
    const auto a = lp::solve(p);
    const auto b = lp::solve(p);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.row_duals, b.row_duals);
    EXPECT_EQ(a.iterations, b.iterations);
  }
}

TEST(Simplex, TraceWritesTableaus) {
  std::ostringstream trace;
  lp::SolverOptions opt;
  opt.trace = &trace;
  lp::solve(beale(), opt);
  EXPECT_FALSE(trace.str().empty());
}

class RandomLpOracle : public ::testing::TestWithParam<bool> {};

TEST_P(RandomLpOracle, MatchesVertexEnumeration) {
  const bool allow_free = GetParam();
  std::mt19937_64 rng(allow_free ? 20251 : 1009);
  int counts[3] = {0, 0, 0};
  for (int k = 0; k < 500; ++k) {
    const auto p = testing::random_small_lp(rng, allow_free);
    const auto s = lp::solve(p);
    const auto o = testing::enumerate_vertices(p);
    ++counts[static_cast<int>(o.status)];
    ASSERT_EQ(s.status, o.status) << "problem " << k;
    if (o.status == Status::Optimal) {
      EXPECT_NEAR(s.objective_value, o.objective, 1e-7 * std::max(1.0, std::fabs(o.objective))) << "problem " << k;
      expect_certified_optimum(p, s);
    }
  }
  // The generator must exercise every outcome.
  EXPECT_GT(counts[static_cast<int>(Status::Optimal)], 50);
  EXPECT_GT(counts[static_cast<int>(Status::Infeasible)], 0);
  EXPECT_GT(counts[static_cast<int>(Status::Unbounded)], 0);
}

INSTANTIATE_TEST_SUITE_P(Bounds, RandomLpOracle, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "WithFreeVariables" : "NonNegative"; });

TEST(Simplex, BadlyScaledProblemsMatchTheirOriginals) {
  // Column 0 is measured in units 1e7 times smaller and row 0 is divided
  // by 1e5; the optimum value must not move.
  std::mt19937_64 rng(77);
  int optimal = 0;
  for (int k = 0; k < 300; ++k) {
    const auto p = testing::random_small_lp(rng, k % 2 == 1);
    auto q = p;
    for (auto& row : q.rows) row.coefficients[0] *= 1e7;
    q.objective[0] *= 1e7;
    for (auto& a : q.rows[0].coefficients) a *= 1e-5;
    q.rows[0].rhs *= 1e-5;
    const auto s = lp::solve(p);
    const auto t = lp::solve(q);
    ASSERT_EQ(s.status, t.status) << "problem " << k;
    if (s.status != Status::Optimal) continue;
    ++optimal;
    EXPECT_NEAR(t.objective_value, s.objective_value, 1e-7 * std::max(1.0, std::fabs(s.objective_value)))
        << "problem " << k;
    const auto act = lp::row_activities(q, t.primal);
    for (std::size_t i = 0; i < q.rows.size(); ++i) {
      double mag = std::fabs(q.rows[i].rhs);
      for (std::size_t j = 0; j < t.primal.size(); ++j) mag += std::fabs(q.rows[i].coefficients[j] * t.primal[j]);
      const double tol = 1e-7 * (1.0 + mag);
      if (q.rows[i].relation == Relation::LessEqual) EXPECT_LE(act[i], q.rows[i].rhs + tol) << "problem " << k;
      if (q.rows[i].relation == Relation::GreaterEqual) EXPECT_GE(act[i], q.rows[i].rhs - tol) << "problem " << k;
      if (q.rows[i].relation == Relation::Equal) EXPECT_NEAR(act[i], q.rows[i].rhs, tol) << "problem " << k;
    }
  }
  EXPECT_GT(optimal, 30);
}

TEST(LpOracle, SolvesKnownProblem) {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3
  LpProblem p;
  p.sense = Sense::Maximize;
  p.objective = {3.0, 2.0};
  p.rows = {{{1.0, 1.0}, Relation::LessEqual, 4.0, ""},
            {{1.0, 3.0}, Relation::LessEqual, 6.0, ""},
            {{1.0, 0.0}, Relation::LessEqual, 3.0, ""}};
  const auto o = testing::enumerate_vertices(p);
  ASSERT_EQ(o.status, Status::Optimal);
  EXPECT_NEAR(o.objective, 11.0, 1e-12);
  EXPECT_NEAR(o.x[0], 3.0, 1e-12);
  EXPECT_NEAR(o.x[1], 1.0, 1e-12);
}

TEST(LpOracle, DetectsUnboundedAndInfeasible) {
  LpProblem p;
  p.sense = Sense::Maximize;
  p.objective = {1.0};
  p.rows = {{{-1.0}, Relation::LessEqual, 1.0, ""}};
  EXPECT_EQ(testing::enumerate_vertices(p).status, Status::Unbounded);
  p.rows = {{{1.0}, Relation::GreaterEqual, 2.0, ""}, {{1.0}, Relation::LessEqual, 1.0, ""}};
  EXPECT_EQ(testing::enumerate_vertices(p).status, Status::Infeasible);
}

}  // namespace
}  // namespace ordvga
