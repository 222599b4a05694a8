#pragma once

// Stage 2 model: super virtual gap of one top-tier DMU against the other
// top-tier DMUs.
//
// The adjustment program (TAP) minimises tau * (sum q + sum p), where q
// expands inputs and p shrinks outputs until the DMU falls back onto the
// frontier of its peers. Its dual, the price program (TVG), maximises
// beta - alpha over nonnegative prices with
//
//     alpha = sum_i x_io v_i + sum_{ordinal i} (upper_i - x_io) dx_i
//     beta  = sum_r y_ro u_r + sum_{ordinal r} (lower_r - y_ro) dy_r
//
// The reported super gap is alpha - beta <= 0 after normalising beta to 1.

#include <string>
#include <vector>

#include "ordvga/matrix.hpp"
#include "ordvga/simplex.hpp"
#include "ordvga/stage.hpp"

namespace ordvga {

// Variables: pi for each top-tier DMU other than dmu, in top_tier order,
// then q per input, then p per output. Rows (all >=): one per input, one
// per output, one per ordinal input, one per ordinal output. Throws
// SoleEfficient when the top tier has fewer than two DMUs and
// ValidationError(UnknownDmu) when dmu is not in it.
lp::LpProblem build_ospt_tap(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                             const std::string& dmu, double tau);

// Variables: v, u, dx, dy, all >= 0. Rows (all <=): one per peer, then
// one per input and per output.
lp::LpProblem build_ospt_tvg(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                             const std::string& dmu, double tau);

// Solves at tau = $1, picks prices, normalises so that beta_star = 1 and
// fills every StageResult field; gap_star holds the reported super gap.
// Throws DegeneratePrices when every optimal price has a zero virtual
// output.
StageResult assess_ospt(const DecisionMatrix& matrix, const std::vector<std::string>& top_tier,
                        const std::string& dmu, const ModelOptions& options = {});

ScscReport verify_scsc_ospt(const DecisionMatrix& matrix, const StageResult& result,
                            const Tolerances& tolerances = {});

}  // namespace ordvga
