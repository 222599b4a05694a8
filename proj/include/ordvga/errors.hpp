#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordvga {

enum class ValidationCode {
  NonPositiveValue,
  OrdinalOutOfBounds,
  OrdinalNotInteger,
  InvalidLikertBounds,
  DuplicateName,
  EmptyAxis,
  UnknownDmu,
  ParseError,
};

const char* to_string(ValidationCode code);

// Input data does not satisfy the decision-matrix rules.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, const std::string& message,
                  std::string metric = {}, std::string dmu = {},
                  std::size_t line = 0);

  ValidationCode code() const noexcept { return code_; }
  const std::string& metric() const noexcept { return metric_; }
  const std::string& dmu() const noexcept { return dmu_; }
  // 1-based line number for ParseError, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ValidationCode code_;
  std::string metric_;
  std::string dmu_;
  std::size_t line_;
};

// Base for failures raised while solving or verifying a model.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverFailure : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NumericalBreakdown : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ScscViolation : public ComputationError {
 public:
  ScscViolation(const std::string& message, double max_abs_product)
      : ComputationError(message), max_abs_product_(max_abs_product) {}
  double max_abs_product() const noexcept { return max_abs_product_; }

 private:
  double max_abs_product_;
};

// Every optimal price vector gives a zero virtual input (stage 1) or
// virtual output (stage 2), so prices cannot be normalised to $1.
class DegeneratePrices : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Stage II needs at least two top-tier DMUs.
class SoleEfficient : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// A computation error annotated with the DMU and stage that raised it.
class AssessmentError : public ComputationError {
 public:
  AssessmentError(std::string dmu, int stage, const std::string& cause);
  const std::string& dmu() const noexcept { return dmu_; }
  int stage() const noexcept { return stage_; }

 private:
  std::string dmu_;
  int stage_;
};

}  // namespace ordvga
