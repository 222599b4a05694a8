#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ordvga {

enum class Direction { Input, Output };

const char* to_string(Direction direction);

// Likert scale bounds of an ordinal metric, 1 <= lower < upper.
struct LikertBounds {
  int lower = 1;
  int upper = 1;

  bool operator==(const LikertBounds&) const = default;
};

struct MetricSpec {
  std::string name;
  Direction direction = Direction::Input;
  // Present for ordinal metrics, absent for cardinal ones.
  std::optional<LikertBounds> likert;
  std::string unit;

  bool ordinal() const { return likert.has_value(); }
  bool operator==(const MetricSpec&) const = default;
};

// Metrics are rows and DMUs are columns: values[metric][dmu].
struct DecisionMatrix {
  std::vector<MetricSpec> metrics;
  std::vector<std::string> dmu_names;
  std::vector<std::vector<double>> values;

  std::size_t num_metrics() const { return metrics.size(); }
  std::size_t num_dmus() const { return dmu_names.size(); }
  double value(std::size_t metric, std::size_t dmu) const { return values[metric][dmu]; }

  // Throws ValidationError(UnknownDmu) when the name is absent.
  std::size_t dmu_index(const std::string& name) const;
  // Metric row indices by direction, in matrix order.
  std::vector<std::size_t> inputs() const;
  std::vector<std::size_t> outputs() const;

  bool operator==(const DecisionMatrix&) const = default;
};

// Returns the matrix unchanged when every invariant holds; throws
// ValidationError naming the first offending metric and DMU otherwise.
DecisionMatrix validate_matrix(const DecisionMatrix& raw);

// CSV layout: header `metric,direction,scale,lower,upper,unit,<dmu>...`,
// then one row per metric. Throws ValidationError(ParseError) with the
// 1-based line number, or any validation error.
DecisionMatrix parse_matrix(std::istream& in);
DecisionMatrix load_matrix(const std::filesystem::path& path);

// Writes the CSV layout read by parse_matrix, values at 17 significant
// digits.
void write_matrix_csv(const DecisionMatrix& matrix, std::ostream& out);

// Drops the named DMU columns, keeping the rest in order. Throws
// ValidationError(UnknownDmu) for a name not in the matrix.
DecisionMatrix remove_dmus(const DecisionMatrix& matrix, const std::vector<std::string>& names);

// Copy with one metric row multiplied by factor.
DecisionMatrix rescale_metric(const DecisionMatrix& matrix, std::size_t metric, double factor);

// 64-bit FNV-1a over the canonical CSV serialization, as 16 hex digits.
std::string matrix_digest(const DecisionMatrix& matrix);

}  // namespace ordvga
