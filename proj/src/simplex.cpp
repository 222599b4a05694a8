#include "ordvga/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ordvga/errors.hpp"

namespace ordvga::lp {

const char* to_string(Status status) {
  switch (status) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "unknown";
}

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
  }
  return "?";
}

void LpProblem::check() const {
  const std::size_t n = objective.size();
  if (!bounds.empty() && bounds.size() != n) {
    throw std::invalid_argument("LpProblem: bounds size does not match objective");
  }
  if (!variable_labels.empty() && variable_labels.size() != n) {
    throw std::invalid_argument("LpProblem: label count does not match objective");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coefficients.size() != n) {
      throw std::invalid_argument("LpProblem: row " + std::to_string(i) +
                                  " has " + std::to_string(rows[i].coefficients.size()) +
                                  " coefficients, expected " + std::to_string(n));
    }
  }
}

std::vector<double> row_activities(const LpProblem& problem, const std::vector<double>& x) {
  std::vector<double> act(problem.rows.size(), 0.0);
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    const auto& a = problem.rows[i].coefficients;
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
    act[i] = s;
  }
  return act;
}

namespace {

// min cost'x  s.t.  A x = b,  b >= 0, structural columns first, then one
// slack or surplus per inequality row, then artificials.
struct StandardForm {
  std::size_t m = 0;
  std::size_t n_struct = 0;
  std::size_t n = 0;
  std::vector<double> a;  // m x n, row-major
  std::vector<double> b;
  std::vector<double> cost;
  std::vector<double> row_scale;
  std::vector<double> row_sign;
  std::vector<double> col_scale;
  std::vector<double> col_flip;
  std::vector<bool> free_var;
  std::vector<bool> artificial;
  std::vector<std::size_t> initial_basis;

  double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

StandardForm make_standard_form(const LpProblem& p, bool scale) {
  StandardForm sf;
  sf.m = p.rows.size();
  sf.n_struct = p.num_variables();
  const std::size_t m = sf.m;
  const std::size_t ns = sf.n_struct;

  std::vector<double> dense(m * ns);
  std::vector<double> rhs(m);
  std::vector<Relation> rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ns; ++j) dense[i * ns + j] = p.rows[i].coefficients[j];
    rhs[i] = p.rows[i].rhs;
    rel[i] = p.rows[i].relation;
  }

  sf.row_scale.assign(m, 1.0);
  sf.col_scale.assign(ns, 1.0);
  if (scale) {
    // Geometric-mean passes narrow the spread of magnitudes, then a final
    // pass brings every row and column maximum to one.
    const auto scale_rows = [&](bool geometric) {
      for (std::size_t i = 0; i < m; ++i) {
        double mx = 0.0;
        double mn = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ns; ++j) {
          const double v = std::abs(dense[i * ns + j]);
          if (v == 0.0) continue;
          mx = std::max(mx, v);
          mn = std::min(mn, v);
        }
        if (mx == 0.0) continue;
        const double f = 1.0 / (geometric ? std::sqrt(mx * mn) : mx);
        sf.row_scale[i] *= f;
        for (std::size_t j = 0; j < ns; ++j) dense[i * ns + j] *= f;
      }
    };
    const auto scale_cols = [&](bool geometric) {
      for (std::size_t j = 0; j < ns; ++j) {
        double mx = 0.0;
        double mn = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
          const double v = std::abs(dense[i * ns + j]);
          if (v == 0.0) continue;
          mx = std::max(mx, v);
          mn = std::min(mn, v);
        }
        if (mx == 0.0) continue;
        const double f = 1.0 / (geometric ? std::sqrt(mx * mn) : mx);
        sf.col_scale[j] *= f;
        for (std::size_t i = 0; i < m; ++i) dense[i * ns + j] *= f;
      }
    };
    for (int pass = 0; pass < 4; ++pass) {
      scale_rows(true);
      scale_cols(true);
    }
    scale_rows(false);
    scale_cols(false);
    for (std::size_t i = 0; i < m; ++i) rhs[i] *= sf.row_scale[i];
  }

  // Make every rhs nonnegative; a >= row with zero rhs becomes a <= row so
  // its slack can start in the basis.
  sf.row_sign.assign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0.0 || (rhs[i] == 0.0 && rel[i] == Relation::GreaterEqual);
    if (!flip) continue;
    sf.row_sign[i] = -1.0;
    rhs[i] = -rhs[i];
    for (std::size_t j = 0; j < ns; ++j) dense[i * ns + j] = -dense[i * ns + j];
    if (rel[i] == Relation::LessEqual) {
      rel[i] = Relation::GreaterEqual;
    } else if (rel[i] == Relation::GreaterEqual) {
      rel[i] = Relation::LessEqual;
    }
  }

  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i] != Relation::Equal) ++n_slack;
    if (rel[i] != Relation::LessEqual) ++n_art;
  }
  sf.n = ns + n_slack + n_art;
  sf.a.assign(m * sf.n, 0.0);
  sf.b = rhs;
  sf.cost.assign(sf.n, 0.0);
  sf.artificial.assign(sf.n, false);
  sf.free_var.assign(sf.n, false);
  sf.col_flip.assign(ns, 1.0);
  sf.initial_basis.assign(m, 0);

  const double obj_sign = p.sense == Sense::Maximize ? -1.0 : 1.0;
  for (std::size_t j = 0; j < ns; ++j) {
    sf.cost[j] = obj_sign * p.objective[j] * sf.col_scale[j];
    sf.free_var[j] = p.bound(j) == VarBound::Free;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ns; ++j) sf.at(i, j) = dense[i * ns + j];
  }
  std::size_t next_slack = ns;
  std::size_t next_art = ns + n_slack;
  for (std::size_t i = 0; i < m; ++i) {
    if (rel[i] == Relation::LessEqual) {
      sf.at(i, next_slack) = 1.0;
      sf.initial_basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::GreaterEqual) sf.at(i, next_slack++) = -1.0;
      sf.at(i, next_art) = 1.0;
      sf.artificial[next_art] = true;
      sf.initial_basis[i] = next_art++;
    }
  }
  return sf;
}

// Dense LU with partial pivoting; solves M z = r in place. Returns false
// when a pivot falls below tol.
bool lu_solve(std::vector<double> mat, std::size_t n, std::vector<double>& r, double tol) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(mat[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(mat[i * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < tol) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(mat[k * n + j], mat[piv * n + j]);
      std::swap(r[k], r[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = mat[i * n + k] / mat[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) mat[i * n + j] -= f * mat[k * n + j];
      r[i] -= f * r[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = r[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= mat[k * n + j] * r[j];
    r[k] = s / mat[k * n + k];
  }
  return true;
}

class Tableau {
 public:
  Tableau(StandardForm& sf, const SolverOptions& opt) : sf_(sf), opt_(opt) {
    m_ = sf.m;
    n_ = sf.n;
    t_ = sf.a;
    rhs_ = sf.b;
    basis_ = sf.initial_basis;
    basic_.assign(n_, false);
    for (auto j : basis_) basic_[j] = true;
    d_.assign(n_, 0.0);
  }

  enum class Outcome { Optimal, Unbounded };

  void set_costs(const std::vector<double>& c) {
    c_ = c;
    for (std::size_t j = 0; j < n_; ++j) {
      double s = c_[j];
      for (std::size_t i = 0; i < m_; ++i) s -= c_[basis_[i]] * t(i, j);
      d_[j] = s;
    }
    obj_ = 0.0;
    for (std::size_t i = 0; i < m_; ++i) obj_ += c_[basis_[i]] * rhs_[i];
  }

  Outcome run(bool allow_artificial_entry) {
    const auto stall_limit = static_cast<long>(opt_.bland_stall_factor * static_cast<double>(m_ + n_));
    bool bland = false;
    long stall = 0;
    double best = obj_;
    for (;;) {
      if (iterations_ >= opt_.max_iterations) {
        throw NumericalBreakdown("simplex: iteration limit of " +
                                 std::to_string(opt_.max_iterations) + " reached");
      }
      std::size_t enter = choose_entering(bland, allow_artificial_entry);
      if (enter == npos && pivots_since_refactor_ > 0) {
        // Confirm optimality on a freshly factored tableau.
        refactor();
        enter = choose_entering(bland, allow_artificial_entry);
      }
      if (enter == npos) return Outcome::Optimal;
      if (d_[enter] > 0.0) flip_column(enter);

      std::size_t leave_row = choose_leaving(enter, bland);
      if (leave_row == npos && pivots_since_refactor_ > 0) {
        // Drift in the updated tableau can fake an improving ray; decide
        // on fresh data.
        refactor();
        continue;
      }
      if (leave_row == npos) {
        if (!ray_improves(enter)) {
          // The reduced cost is roundoff relative to the ray's cost terms.
          d_[enter] = 0.0;
          continue;
        }
        ray_column_ = enter;
        return Outcome::Unbounded;
      }
      pivot(leave_row, enter);
      ++iterations_;
      if (pivots_since_refactor_ >= kRefactorInterval) refactor();
      if (opt_.trace != nullptr) dump(enter, leave_row);

      if (obj_ < best - 1e-12 * (1.0 + std::abs(best))) {
        best = obj_;
        stall = 0;
      } else if (++stall > stall_limit) {
        bland = true;
      }
    }
  }

  // Pivots basic artificials out wherever a non-artificial column has a
  // usable entry in their row. Rows left with a basic artificial are
  // redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!sf_.artificial[basis_[i]]) continue;
      std::size_t best_j = npos;
      double best_v = opt_.pivot_tol;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sf_.artificial[j] || basic_[j]) continue;
        const double v = std::abs(t(i, j));
        if (v > best_v) {
          best_v = v;
          best_j = j;
        }
      }
      if (best_j != npos) {
        pivot(i, best_j);
        ++iterations_;
      }
    }
  }

  // Rebuilds the tableau, right-hand side and reduced costs from the
  // standard form and the current basis.
  void refactor() {
    std::vector<double> bt(m_ * m_);
    std::vector<double> aug(m_ * (n_ + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) bt[i * m_ + k] = sf_.at(i, basis_[k]);
      for (std::size_t j = 0; j < n_; ++j) aug[i * (n_ + 1) + j] = sf_.at(i, j);
      aug[i * (n_ + 1) + n_] = sf_.b[i];
    }
    const std::size_t w = n_ + 1;
    std::vector<std::size_t> row_of(m_);
    for (std::size_t i = 0; i < m_; ++i) row_of[i] = i;
    // Gauss-Jordan on [B | A b] with partial pivoting.
    for (std::size_t k = 0; k < m_; ++k) {
      std::size_t piv = k;
      for (std::size_t i = k + 1; i < m_; ++i) {
        if (std::abs(bt[i * m_ + k]) > std::abs(bt[piv * m_ + k])) piv = i;
      }
      if (std::abs(bt[piv * m_ + k]) < opt_.pivot_tol) {
        throw NumericalBreakdown("simplex: basis became numerically singular");
      }
      if (piv != k) {
        for (std::size_t j = 0; j < m_; ++j) std::swap(bt[k * m_ + j], bt[piv * m_ + j]);
        for (std::size_t j = 0; j < w; ++j) std::swap(aug[k * w + j], aug[piv * w + j]);
      }
      const double pv = bt[k * m_ + k];
      for (std::size_t j = 0; j < m_; ++j) bt[k * m_ + j] /= pv;
      for (std::size_t j = 0; j < w; ++j) aug[k * w + j] /= pv;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == k) continue;
        const double f = bt[i * m_ + k];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < m_; ++j) bt[i * m_ + j] -= f * bt[k * m_ + j];
        for (std::size_t j = 0; j < w; ++j) aug[i * w + j] -= f * aug[k * w + j];
      }
    }
    // Row k of the result now belongs to basis_[k].
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t(i, j) = aug[i * w + j];
      rhs_[i] = aug[i * w + n_];
      for (std::size_t k = 0; k < m_; ++k) t(i, basis_[k]) = i == k ? 1.0 : 0.0;
    }
    set_costs(c_);
    pivots_since_refactor_ = 0;
  }

  // True when the ray along column j lowers the objective by more than
  // roundoff in the sum of its cost terms.
  bool ray_improves(std::size_t j) const {
    double mag = std::abs(c_[j]);
    for (std::size_t i = 0; i < m_; ++i) mag += std::abs(c_[basis_[i]] * t(i, j));
    return d_[j] < -opt_.opt_tol * std::max(1.0, mag);
  }

  double objective() const { return obj_; }
  int iterations() const { return iterations_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  double reduced_cost(std::size_t j) const { return d_[j]; }
  double rhs(std::size_t i) const { return rhs_[i]; }
  double entry(std::size_t i, std::size_t j) const { return t(i, j); }
  std::size_t ray_column() const { return ray_column_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  double& t(std::size_t i, std::size_t j) { return t_[i * n_ + j]; }
  double t(std::size_t i, std::size_t j) const { return t_[i * n_ + j]; }

  bool eligible(std::size_t j, bool allow_artificial) const {
    if (basic_[j]) return false;
    if (!allow_artificial && sf_.artificial[j]) return false;
    return true;
  }

  // Improvement score of column j, or 0 when it cannot improve.
  double score(std::size_t j) const {
    if (d_[j] < -opt_.opt_tol) return -d_[j];
    if (sf_.free_var[j] && d_[j] > opt_.opt_tol) return d_[j];
    return 0.0;
  }

  std::size_t choose_entering(bool bland, bool allow_artificial) const {
    std::size_t best_j = npos;
    double best_s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!eligible(j, allow_artificial)) continue;
      const double s = score(j);
      if (s <= 0.0) continue;
      if (bland) return j;
      if (s > best_s) {
        best_s = s;
        best_j = j;
      }
    }
    return best_j;
  }

  std::size_t choose_leaving(std::size_t enter, bool bland) const {
    double theta_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      if (sf_.free_var[basis_[i]]) continue;
      const double a = t(i, enter);
      if (a <= opt_.pivot_tol) continue;
      theta_min = std::min(theta_min, std::max(0.0, rhs_[i]) / a);
    }
    if (!std::isfinite(theta_min)) return npos;
    const double tie = 1e-12 * (1.0 + theta_min);
    std::size_t pick = npos;
    for (std::size_t i = 0; i < m_; ++i) {
      if (sf_.free_var[basis_[i]]) continue;
      const double a = t(i, enter);
      if (a <= opt_.pivot_tol) continue;
      if (std::max(0.0, rhs_[i]) / a > theta_min + tie) continue;
      if (pick == npos) {
        pick = i;
      } else if (bland) {
        if (basis_[i] < basis_[pick]) pick = i;
      } else if (a > t(pick, enter)) {
        pick = i;
      }
    }
    return pick;
  }

  // Substitutes x_j -> -x_j for a free column about to enter downwards.
  void flip_column(std::size_t j) {
    for (std::size_t i = 0; i < m_; ++i) t(i, j) = -t(i, j);
    d_[j] = -d_[j];
    c_[j] = -c_[j];
    sf_.cost[j] = -sf_.cost[j];
    for (std::size_t i = 0; i < m_; ++i) sf_.at(i, j) = -sf_.at(i, j);
    if (j < sf_.n_struct) sf_.col_flip[j] = -sf_.col_flip[j];
  }

  void pivot(std::size_t r, std::size_t c) {
    const double p = t(r, c);
    for (std::size_t j = 0; j < n_; ++j) t(r, j) /= p;
    rhs_[r] /= p;
    t(r, c) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = t(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) t(i, j) -= f * t(r, j);
      t(i, c) = 0.0;
      rhs_[i] -= f * rhs_[r];
    }
    const double dc = d_[c];
    if (dc != 0.0) {
      for (std::size_t j = 0; j < n_; ++j) d_[j] -= dc * t(r, j);
      d_[c] = 0.0;
      obj_ += dc * rhs_[r];
    }
    basic_[basis_[r]] = false;
    basis_[r] = c;
    basic_[c] = true;
    ++pivots_since_refactor_;
  }

  void dump(std::size_t enter, std::size_t leave_row) const {
    auto& os = *opt_.trace;
    os << "iter " << iterations_ << " enter x" << enter << " leave row " << leave_row
       << " obj " << std::setprecision(12) << obj_ << '\n';
    for (std::size_t i = 0; i < m_; ++i) {
      os << "  [x" << basis_[i] << "]";
      for (std::size_t j = 0; j < n_; ++j) os << ' ' << std::setw(10) << std::setprecision(4) << t(i, j);
      os << " | " << rhs_[i] << '\n';
    }
    os << "  d   ";
    for (std::size_t j = 0; j < n_; ++j) os << ' ' << std::setw(10) << std::setprecision(4) << d_[j];
    os << '\n';
  }

  StandardForm& sf_;
  const SolverOptions& opt_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<double> t_;
  std::vector<double> rhs_;
  std::vector<double> c_;
  std::vector<double> d_;
  std::vector<std::size_t> basis_;
  std::vector<bool> basic_;
  double obj_ = 0.0;
  int iterations_ = 0;
  std::size_t ray_column_ = npos;
  int pivots_since_refactor_ = 0;
  static constexpr int kRefactorInterval = 100;
};

void fill_diagnostics(const LpProblem& p, const StandardForm& sf, const SolverOptions& opt,
                      LpSolution& sol) {
  const std::size_t m = p.num_rows();
  const std::size_t n = p.num_variables();
  const auto act = row_activities(p, sol.primal);

  sol.objective_value = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective_value += p.objective[j] * sol.primal[j];
  sol.dual_objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) sol.dual_objective += p.rows[i].rhs * sol.row_duals[i];

  sol.reduced_costs.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = p.objective[j];
    for (std::size_t i = 0; i < m; ++i) s -= p.rows[i].coefficients[j] * sol.row_duals[i];
    sol.reduced_costs[j] = s;
  }

  sol.max_primal_residual = 0.0;
  sol.max_complementarity = 0.0;
  sol.complementarity.clear();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = p.rows[i];
    const double r = sf.row_scale[i];
    double slack = 0.0;
    double viol = 0.0;
    switch (row.relation) {
      case Relation::LessEqual:
        slack = row.rhs - act[i];
        viol = std::max(0.0, -slack);
        break;
      case Relation::GreaterEqual:
        slack = act[i] - row.rhs;
        viol = std::max(0.0, -slack);
        break;
      case Relation::Equal:
        viol = std::abs(act[i] - row.rhs);
        break;
    }
    sol.max_primal_residual = std::max(sol.max_primal_residual, viol * r);
    if (row.relation == Relation::Equal) continue;
    ComplementaryPair cp;
    cp.kind = ComplementaryPair::Kind::Row;
    cp.index = i;
    cp.primal_side = slack;
    cp.dual_side = sol.row_duals[i];
    cp.strict = !(std::abs(slack * r) <= opt.feas_tol && std::abs(sol.row_duals[i] / r) <= opt.opt_tol);
    sol.max_complementarity = std::max(sol.max_complementarity, std::abs(slack * sol.row_duals[i]));
    sol.complementarity.push_back(cp);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (p.bound(j) == VarBound::Free) continue;
    sol.max_primal_residual = std::max(sol.max_primal_residual, std::max(0.0, -sol.primal[j]));
    const double cs = sf.col_scale[j];
    ComplementaryPair cp;
    cp.kind = ComplementaryPair::Kind::Variable;
    cp.index = j;
    cp.primal_side = sol.primal[j];
    cp.dual_side = sol.reduced_costs[j];
    cp.strict = !(std::abs(sol.primal[j] / cs) <= opt.feas_tol && std::abs(sol.reduced_costs[j] * cs) <= opt.opt_tol);
    sol.complementarity.push_back(cp);
  }
}

}  // namespace

namespace {

// Largest row violation relative to the row's term magnitudes.
double relative_residual(const LpProblem& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& row : p.rows) {
    double act = 0.0;
    double mag = std::abs(row.rhs);
    for (std::size_t j = 0; j < x.size(); ++j) {
      act += row.coefficients[j] * x[j];
      mag += std::abs(row.coefficients[j] * x[j]);
    }
    double viol = 0.0;
    switch (row.relation) {
      case Relation::LessEqual: viol = act - row.rhs; break;
      case Relation::GreaterEqual: viol = row.rhs - act; break;
      case Relation::Equal: viol = std::abs(act - row.rhs); break;
    }
    worst = std::max(worst, viol / (1.0 + mag));
  }
  return worst;
}

LpSolution solve_once(const LpProblem& problem, const SolverOptions& options);

}  // namespace

LpSolution solve(const LpProblem& problem, const SolverOptions& options) {
  problem.check();
  if (!options.scale) return solve_once(problem, options);
  // A scaled solve whose basis is inaccurate in original units is
  // repeated without scaling.
  SolverOptions plain = options;
  plain.scale = false;
  LpSolution sol;
  try {
    sol = solve_once(problem, options);
  } catch (const NumericalBreakdown&) {
    return solve_once(problem, plain);
  }
  if (sol.status == Status::Optimal && relative_residual(problem, sol.primal) > options.feas_tol) {
    return solve_once(problem, plain);
  }
  return sol;
}

namespace {

LpSolution solve_once(const LpProblem& problem, const SolverOptions& options) {
  StandardForm sf = make_standard_form(problem, options.scale);
  const std::size_t m = sf.m;
  const std::size_t ns = sf.n_struct;
  Tableau tab(sf, options);
  LpSolution sol;

  // Phase one: minimise the sum of artificials.
  std::vector<double> phase1(sf.n, 0.0);
  bool any_artificial = false;
  for (std::size_t j = 0; j < sf.n; ++j) {
    if (sf.artificial[j]) {
      phase1[j] = 1.0;
      any_artificial = true;
    }
  }
  if (any_artificial) {
    tab.set_costs(phase1);
    tab.run(true);
    double bmax = 1.0;
    for (double v : sf.b) bmax = std::max(bmax, std::abs(v));
    if (tab.objective() > options.feas_tol * bmax) {
      sol.status = Status::Infeasible;
      sol.iterations = tab.iterations();
      sol.primal.assign(ns, 0.0);
      sol.row_duals.assign(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j0 = sf.initial_basis[i];
        const double y = phase1[j0] - tab.reduced_cost(j0);
        sol.row_duals[i] = y * sf.row_sign[i] * sf.row_scale[i];
      }
      sol.objective_value = std::numeric_limits<double>::quiet_NaN();
      return sol;
    }
    tab.drive_out_artificials();
  }

  tab.set_costs(sf.cost);
  const auto outcome = tab.run(false);
  sol.iterations = tab.iterations();

  if (outcome == Tableau::Outcome::Unbounded) {
    sol.status = Status::Unbounded;
    const std::size_t jr = tab.ray_column();
    std::vector<double> ray(sf.n, 0.0);
    ray[jr] = 1.0;
    for (std::size_t i = 0; i < m; ++i) ray[tab.basis()[i]] = -tab.entry(i, jr);
    sol.primal.assign(ns, 0.0);
    for (std::size_t j = 0; j < ns; ++j) sol.primal[j] = ray[j] * sf.col_scale[j] * sf.col_flip[j];
    sol.row_duals.assign(m, 0.0);
    sol.objective_value = problem.sense == Sense::Maximize
                              ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
    return sol;
  }

  // Recompute the basic solution and duals from the final basis rather
  // than trusting the accumulated tableau.
  const auto& basis = tab.basis();
  std::vector<double> bmat(m * m);
  std::vector<double> btmat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      bmat[i * m + k] = sf.at(i, basis[k]);
      btmat[k * m + i] = sf.at(i, basis[k]);
    }
  }
  std::vector<double> xb = sf.b;
  std::vector<double> y(m);
  for (std::size_t k = 0; k < m; ++k) y[k] = sf.cost[basis[k]];
  if (m > 0 && (!lu_solve(bmat, m, xb, options.pivot_tol) || !lu_solve(btmat, m, y, options.pivot_tol))) {
    throw NumericalBreakdown("simplex: final basis is numerically singular");
  }

  std::vector<double> xs(sf.n, 0.0);
  for (std::size_t k = 0; k < m; ++k) xs[basis[k]] = xb[k];
  sol.status = Status::Optimal;
  sol.primal.assign(ns, 0.0);
  for (std::size_t j = 0; j < ns; ++j) {
    double v = xs[j];
    if (!sf.free_var[j] && v < 0.0 && v > -options.feas_tol) v = 0.0;
    sol.primal[j] = v * sf.col_scale[j] * sf.col_flip[j];
  }
  const double dual_sign = problem.sense == Sense::Maximize ? -1.0 : 1.0;
  sol.row_duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    sol.row_duals[i] = dual_sign * y[i] * sf.row_sign[i] * sf.row_scale[i];
  }
  fill_diagnostics(problem, sf, options, sol);
  return sol;
}

}  // namespace

}  // namespace ordvga::lp
