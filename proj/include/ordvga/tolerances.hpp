#pragma once

#include "ordvga/simplex.hpp"

namespace ordvga {

// Numerical thresholds shared by the solver, the models and the pipeline.
struct Tolerances {
  double feasibility = 1e-8;
  double pivot = 1e-10;
  double duality_gap = 1e-7;
  double optimality = 1e-9;
  // pi_j above this makes DMU j a reference peer.
  double peer_intensity = 1e-9;
  // Stage I gaps at or below this put a DMU in the top tier.
  double top_tier_gap = 1e-6;
  double scsc_product = 1e-6;
  // Factor magnitude (in $ or dimensionless units) treated as zero when
  // classifying complementary pairs as strict or not.
  double strict_zero = 1e-9;
  // Stage II gaps closer than this are reported as a tie.
  double tie = 1e-9;
  // The stage 1 virtual input or stage 2 virtual output at tau = $1 must
  // exceed this before prices are rescaled by its reciprocal.
  double normalization_floor = 1e-9;

  Tolerances scaled(double factor) const;
  lp::SolverOptions solver_options() const;

  // Defaults multiplied by ORDVGA_TOLERANCE_SCALE when set. Throws
  // std::invalid_argument on a malformed or non-positive value.
  static Tolerances from_environment();
};

// Parses a tolerance scale factor; throws std::invalid_argument.
double parse_tolerance_scale(const char* text);

}  // namespace ordvga
