#pragma once

// Result types shared by the best-practice (stage 1) and super (stage 2)
// models.

#include <optional>
#include <string>
#include <vector>

#include "ordvga/tolerances.hpp"

namespace ordvga {

enum class Stage { BestPractice = 1, Super = 2 };

const char* to_string(Stage stage);

// How the goal-price vector is picked when the price program has
// alternative optima. TightestGoalPrice re-optimises over the optimal
// price face: stage 1 takes the smallest virtual input among prices with
// a nonnegative virtual output, preferring nonnegative v and u; stage 2
// takes the largest virtual output. TapDuals keeps the row duals of the
// adjustment program as returned by the simplex basis. Either way, prices
// whose normalising virtual input or output is not positive are replaced
// by a face point where it is, when one exists.
enum class PriceSelection { TightestGoalPrice, TapDuals };

const char* to_string(PriceSelection selection);

struct ModelOptions {
  Tolerances tolerances;
  PriceSelection price_selection = PriceSelection::TightestGoalPrice;
};

// Prices in $ per unit. dx and dy are aligned with the input and output
// metrics respectively and hold zero for cardinal metrics.
struct PriceVector {
  double tau = 0.0;
  std::vector<double> v;
  std::vector<double> u;
  std::vector<double> dx;
  std::vector<double> dy;
};

// q per input, p per output, pi per DMU of the comparison set.
struct AdjustmentVector {
  std::vector<double> q;
  std::vector<double> p;
  std::vector<double> pi;
};

struct ScscEntry {
  std::string id;
  double left = 0.0;
  double right = 0.0;
  double product = 0.0;
  // False when both factors are numerically zero.
  bool strict = true;
};

struct ScscReport {
  std::vector<ScscEntry> entries;
  double max_abs_product = 0.0;
};

struct VirtualPair {
  std::string dmu;
  double alpha = 0.0;
  double beta = 0.0;
};

struct StageResult {
  std::string dmu;
  Stage stage = Stage::BestPractice;
  // Stage 1: every DMU. Stage 2: the top tier, including the assessed DMU
  // whose intensity is fixed at zero.
  std::vector<std::string> comparison_set;
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;

  // Adjustment-program optimum at tau = $1 and the price-program value
  // of the selected prices at tau = $1.
  double step1_objective = 0.0;
  double step1_price_objective = 0.0;
  double step1_alpha = 0.0;
  double step1_beta = 0.0;
  double t_bar = 0.0;

  double tau_star = 0.0;
  // Stage 1: alpha - beta >= 0. Stage 2: alpha - beta <= 0.
  double gap_star = 0.0;
  PriceVector prices;
  AdjustmentVector adjustments;
  double alpha_star = 0.0;
  double beta_star = 0.0;

  // One pair per comparison DMU; the assessed DMU's entry carries the
  // Likert-adjusted (alpha_star, beta_star).
  std::vector<VirtualPair> pairs;
  std::vector<double> targets_x;
  std::vector<double> targets_y;
  // Nearest Likert point of each ordinal target, empty for cardinal
  // metrics.
  std::vector<std::optional<int>> likert_targets_x;
  std::vector<std::optional<int>> likert_targets_y;
  double benchmark_alpha = 0.0;
  double benchmark_beta = 0.0;
  // Stage 1: gap / alpha. Stage 2: alpha / beta.
  double inefficiency = 0.0;
  double efficiency = 0.0;
  std::vector<std::string> peers;
  ScscReport scsc;
  // Virtual cost per metric, inputs first then outputs, in matrix order.
  std::vector<double> metric_prices;
  PriceSelection price_source = PriceSelection::TapDuals;
};

}  // namespace ordvga
