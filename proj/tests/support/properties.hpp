#pragma once

// Property checks shared by the unit tests and the acceptance binary. Each
// returns a list of human-readable violations, empty when the property
// holds.

#include <string>
#include <vector>

#include "ordvga/matrix.hpp"
#include "ordvga/pipeline.hpp"

namespace ordvga::testing {

// How stage 1 gaps and unpriced stage 2 DMUs are judged. Strict wants
// every stage 1 gap in [0, 1) and a priced stage 2 result for every
// top-tier DMU. ModelBounds accepts a stage 1 gap of 1 or more when the
// matrix has an ordinal output and beta_star is not positive, and accepts
// unpriced stage 2 DMUs.
enum class GapRange { Strict, ModelBounds };

// Strong duality of both stages, normalisation, gap ranges, SCSC,
// benchmark balance and Likert compliance for every assessment of the
// matrix.
std::vector<std::string> check_duality_suite(const DecisionMatrix& matrix, const AssessmentReport& report,
                                             GapRange range = GapRange::ModelBounds);

// Rescales every cardinal metric by factor, one at a time and all
// together, and compares goal prices, gaps, top tier, best DMU and the
// first ranking round with the unscaled report.
std::vector<std::string> check_unit_invariance(const DecisionMatrix& matrix, const AssessmentReport& report,
                                               double factor, double tolerance = 1e-7);

// Drops the named DMU and compares the stage 1 gaps of the others.
std::vector<std::string> check_removal_invariance(const DecisionMatrix& matrix, const AssessmentReport& report,
                                                  const std::string& dmu, double tolerance = 1e-9);

}  // namespace ordvga::testing
