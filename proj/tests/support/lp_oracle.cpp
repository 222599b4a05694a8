#include "lp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ordvga::testing {

namespace {

// a . x <= b
struct Halfspace {
  std::vector<double> a;
  double b = 0.0;
};

bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    }
    if (std::fabs(a[piv][c]) < 1e-11) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) x[c] = b[c] / a[c][c];
  return true;
}

OracleResult enumerate_in_box(const lp::LpProblem& problem, double box, double tol) {
  const std::size_t n = problem.num_variables();
  std::vector<Halfspace> hs;
  for (const auto& row : problem.rows) {
    std::vector<double> neg(row.coefficients.size());
    for (std::size_t j = 0; j < n; ++j) neg[j] = -row.coefficients[j];
    if (row.relation != lp::Relation::GreaterEqual) hs.push_back({row.coefficients, row.rhs});
    if (row.relation != lp::Relation::LessEqual) hs.push_back({neg, -row.rhs});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    hs.push_back({e, box});
    e[j] = -1.0;
    hs.push_back({e, problem.bound(j) == lp::VarBound::NonNegative ? 0.0 : box});
  }

  const double sign = problem.sense == lp::Sense::Maximize ? -1.0 : 1.0;
  OracleResult best;
  double best_value = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  const std::size_t h = hs.size();
  if (n == 0 || n > h) return best;
  while (true) {
    std::vector<std::vector<double>> a(n);
    std::vector<double> b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = hs[pick[k]].a;
      b[k] = hs[pick[k]].b;
    }
    std::vector<double> x;
    if (solve_square(a, b, x)) {
      bool feasible = true;
      for (const auto& s : hs) {
        double lhs = 0.0;
        double mag = std::fabs(s.b);
        for (std::size_t j = 0; j < n; ++j) {
          lhs += s.a[j] * x[j];
          mag = std::max(mag, std::fabs(s.a[j] * x[j]));
        }
        if (lhs - s.b > tol * std::max(1.0, mag)) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        double z = 0.0;
        for (std::size_t j = 0; j < n; ++j) z += problem.objective[j] * x[j];
        if (sign * z < best_value) {
          best_value = sign * z;
          best.status = lp::Status::Optimal;
          best.objective = z;
          best.x = x;
        }
      }
    }
    // Next n-subset in lexicographic order.
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == h - n + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t r = k; r < n; ++r) pick[r] = pick[r - 1] + 1;
  }

  return best;
}

}  // namespace

OracleResult enumerate_vertices(const lp::LpProblem& problem, double box, double tol) {
  // The box only cuts the feasible set along unbounded directions, so the
  // optimum moves with the box exactly when the problem is unbounded.
  OracleResult small = enumerate_in_box(problem, box, tol);
  if (small.status != lp::Status::Optimal) return small;
  const OracleResult large = enumerate_in_box(problem, box * 10.0, tol);
  if (std::fabs(large.objective - small.objective) > 1e-6 * std::max(1.0, std::fabs(small.objective))) {
    small.status = lp::Status::Unbounded;
  }
  return small;
}

lp::LpProblem random_small_lp(std::mt19937_64& rng, bool allow_free) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> rhs(-5, 10);
  std::uniform_int_distribution<int> rel(0, 5);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution free_var(0.25);
  lp::LpProblem p;
  p.sense = coin(rng) ? lp::Sense::Maximize : lp::Sense::Minimize;
  const int n = 5;
  for (int j = 0; j < n; ++j) {
    p.objective.push_back(coef(rng));
    p.bounds.push_back(allow_free && free_var(rng) ? lp::VarBound::Free : lp::VarBound::NonNegative);
  }
  for (int i = 0; i < 6; ++i) {
    lp::Row row;
    for (int j = 0; j < n; ++j) row.coefficients.push_back(coef(rng));
    const int r = rel(rng);
    row.relation = r < 3 ? lp::Relation::LessEqual : (r < 5 ? lp::Relation::GreaterEqual : lp::Relation::Equal);
    row.rhs = rhs(rng);
    p.rows.push_back(row);
  }
  return p;
}

lp::LpProblem beale_cycling_lp() {
  lp::LpProblem p;
  p.objective = {-0.75, 20.0, -0.5, 6.0};
  p.rows = {{{0.25, -8.0, -1.0, 9.0}, lp::Relation::LessEqual, 0.0, ""},
            {{0.5, -12.0, -0.5, 3.0}, lp::Relation::LessEqual, 0.0, ""},
            {{0.0, 0.0, 1.0, 0.0}, lp::Relation::LessEqual, 1.0, ""}};
  return p;
}

}  // namespace ordvga::testing
