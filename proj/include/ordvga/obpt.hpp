#pragma once

// Stage 1 model: best-practice virtual gap of one DMU against all DMUs.
//
// The adjustment program (TAP) maximises tau * (sum q + sum p) over
// intensities pi, input reductions q and output expansions p. Its dual,
// the price program (TVG), minimises the virtual gap alpha - beta over
// input prices v, output prices u and Likert penalties dx, dy, with
//
//     alpha = sum_i x_io v_i + sum_{ordinal i} (x_io - lower_i) dx_i
//     beta  = sum_r y_ro u_r + sum_{ordinal r} (y_ro - upper_r) dy_r

#include <string>

#include "ordvga/matrix.hpp"
#include "ordvga/simplex.hpp"
#include "ordvga/stage.hpp"

namespace ordvga {

// Variables: pi for every DMU in matrix order, then q per input, then p
// per output. Rows: one equality per input, one per output, then one <=
// row per ordinal input and per ordinal output.
lp::LpProblem build_obpt_tap(const DecisionMatrix& matrix, const std::string& dmu, double tau);

// Variables: v per input and u per output (free), then dx per ordinal
// input and dy per ordinal output (>= 0). Rows: one >= row per DMU, then
// one >= row per input and per output.
lp::LpProblem build_obpt_tvg(const DecisionMatrix& matrix, const std::string& dmu, double tau);

// Solves the adjustment program at tau = $1, picks prices, normalises so
// that alpha_star = 1 and fills every StageResult field. Throws
// SolverFailure, NumericalBreakdown, DegeneratePrices or ScscViolation.
StageResult assess_obpt(const DecisionMatrix& matrix, const std::string& dmu,
                        const ModelOptions& options = {});

// Recomputes every complementary product of a stage 1 result.
ScscReport verify_scsc_obpt(const DecisionMatrix& matrix, const StageResult& result,
                            const Tolerances& tolerances = {});

}  // namespace ordvga
