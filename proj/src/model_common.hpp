#pragma once

// Helpers shared by the stage 1 and stage 2 model builders.

#include <cstddef>
#include <string>
#include <vector>

#include "ordvga/matrix.hpp"
#include "ordvga/simplex.hpp"
#include "ordvga/stage.hpp"

namespace ordvga::detail {

// Input and output rows of a matrix with their Likert data, seen from the
// assessed DMU o.
struct ModelView {
  ModelView(const DecisionMatrix& matrix, const std::string& dmu);

  const DecisionMatrix& matrix;
  std::size_t o = 0;
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
  // Positions into in / out of the ordinal metrics.
  std::vector<std::size_t> ord_in;
  std::vector<std::size_t> ord_out;

  std::size_t m() const { return in.size(); }
  std::size_t s() const { return out.size(); }
  double x(std::size_t i, std::size_t j) const { return matrix.values[in[i]][j]; }
  double y(std::size_t r, std::size_t j) const { return matrix.values[out[r]][j]; }
  double xo(std::size_t i) const { return x(i, o); }
  double yo(std::size_t r) const { return y(r, o); }
  const LikertBounds& in_bounds(std::size_t i) const { return *matrix.metrics[in[i]].likert; }
  const LikertBounds& out_bounds(std::size_t r) const { return *matrix.metrics[out[r]].likert; }

  std::vector<std::string> input_names() const;
  std::vector<std::string> output_names() const;
  // Number of price variables: v, u, dx (ordinal inputs), dy (ordinal
  // outputs).
  std::size_t num_prices() const { return m() + s() + ord_in.size() + ord_out.size(); }
};

// Splits a flat price vector laid out as (v, u, dx, dy) into a PriceVector
// with dx and dy expanded to full input and output length.
PriceVector unpack_prices(const ModelView& view, const std::vector<double>& flat, double tau);

// Adds row coefficients . x (relation) rhs to the problem.
void add_row(lp::LpProblem& problem, std::vector<double> coefficients, lp::Relation relation,
             double rhs, std::string label);

// Re-optimises a price program over its optimal face. The face row keeps
// face_objective within a relative 1e-9 of its optimum, and the problem
// then optimises selection_objective in selection_sense. Returns an empty
// vector when the selection program has no optimum.
std::vector<double> select_on_face(lp::LpProblem price_program, double optimum,
                                   const std::vector<double>& selection_objective,
                                   lp::Sense selection_sense, const lp::SolverOptions& options);

// Throws SolverFailure naming the program when status is not Optimal.
void require_optimal(const lp::LpSolution& solution, const std::string& what);

// Appends one complementary pair. Strictness is judged on left / scale
// and right * scale so that metric rows compare in $ terms.
void push_scsc_entry(ScscReport& report, std::string id, double left, double right,
                     double scale, double zero);

// Fills likert_targets_x / likert_targets_y from targets_x / targets_y.
void fill_likert_targets(const ModelView& view, StageResult& result);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ordvga::detail
