#include "ordvga/tolerances.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ordvga {

Tolerances Tolerances::scaled(double factor) const {
  Tolerances t = *this;
  t.feasibility *= factor;
  t.pivot *= factor;
  t.duality_gap *= factor;
  t.optimality *= factor;
  t.peer_intensity *= factor;
  t.top_tier_gap *= factor;
  t.scsc_product *= factor;
  t.strict_zero *= factor;
  t.tie *= factor;
  t.normalization_floor *= factor;
  return t;
}

lp::SolverOptions Tolerances::solver_options() const {
  lp::SolverOptions o;
  o.feas_tol = feasibility;
  o.pivot_tol = pivot;
  o.gap_tol = duality_gap;
  o.opt_tol = optimality;
  return o;
}

double parse_tolerance_scale(const char* text) {
  if (text == nullptr || *text == '\0') {
    throw std::invalid_argument("tolerance scale is empty");
  }
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (errno != 0 || end == text || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string("invalid tolerance scale '") + text +
                                "': expected a positive number");
  }
  return v;
}

Tolerances Tolerances::from_environment() {
  const char* env = std::getenv("ORDVGA_TOLERANCE_SCALE");
  if (env == nullptr) return Tolerances{};
  try {
    return Tolerances{}.scaled(parse_tolerance_scale(env));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("ORDVGA_TOLERANCE_SCALE: ") + e.what());
  }
}

}  // namespace ordvga
