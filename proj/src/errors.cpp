#include "ordvga/errors.hpp"

#include <utility>

namespace ordvga {

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::NonPositiveValue: return "non_positive_value";
    case ValidationCode::OrdinalOutOfBounds: return "ordinal_out_of_bounds";
    case ValidationCode::OrdinalNotInteger: return "ordinal_not_integer";
    case ValidationCode::InvalidLikertBounds: return "invalid_likert_bounds";
    case ValidationCode::DuplicateName: return "duplicate_name";
    case ValidationCode::EmptyAxis: return "empty_axis";
    case ValidationCode::UnknownDmu: return "unknown_dmu";
    case ValidationCode::ParseError: return "parse_error";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationCode code, const std::string& message,
                                 std::string metric, std::string dmu, std::size_t line)
    : std::runtime_error(message),
      code_(code),
      metric_(std::move(metric)),
      dmu_(std::move(dmu)),
      line_(line) {}

AssessmentError::AssessmentError(std::string dmu, int stage, const std::string& cause)
    : ComputationError("stage " + std::to_string(stage) + " assessment of " + dmu +
                       " failed: " + cause),
      dmu_(std::move(dmu)),
      stage_(stage) {}

}  // namespace ordvga
