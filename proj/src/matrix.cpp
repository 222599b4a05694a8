#include "ordvga/matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "ordvga/errors.hpp"

namespace ordvga {

const char* to_string(Direction direction) {
  return direction == Direction::Input ? "input" : "output";
}

std::size_t DecisionMatrix::dmu_index(const std::string& name) const {
  for (std::size_t j = 0; j < dmu_names.size(); ++j) {
    if (dmu_names[j] == name) return j;
  }
  throw ValidationError(ValidationCode::UnknownDmu, "unknown DMU '" + name + "'", {}, name);
}

std::vector<std::size_t> DecisionMatrix::inputs() const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < metrics.size(); ++k) {
    if (metrics[k].direction == Direction::Input) idx.push_back(k);
  }
  return idx;
}

std::vector<std::size_t> DecisionMatrix::outputs() const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < metrics.size(); ++k) {
    if (metrics[k].direction == Direction::Output) idx.push_back(k);
  }
  return idx;
}

DecisionMatrix validate_matrix(const DecisionMatrix& raw) {
  if (raw.dmu_names.empty()) {
    throw ValidationError(ValidationCode::EmptyAxis, "matrix has no DMUs");
  }
  if (raw.inputs().empty()) {
    throw ValidationError(ValidationCode::EmptyAxis, "matrix has no input metrics");
  }
  if (raw.outputs().empty()) {
    throw ValidationError(ValidationCode::EmptyAxis, "matrix has no output metrics");
  }
  std::set<std::string> seen;
  for (const auto& m : raw.metrics) {
    if (!seen.insert(m.name).second) {
      throw ValidationError(ValidationCode::DuplicateName, "duplicate metric name '" + m.name + "'", m.name);
    }
  }
  seen.clear();
  for (const auto& d : raw.dmu_names) {
    if (!seen.insert(d).second) {
      throw ValidationError(ValidationCode::DuplicateName, "duplicate DMU name '" + d + "'", {}, d);
    }
  }
  if (raw.values.size() != raw.metrics.size()) {
    throw ValidationError(ValidationCode::ParseError, "value table has " +
                          std::to_string(raw.values.size()) + " rows for " +
                          std::to_string(raw.metrics.size()) + " metrics");
  }
  for (std::size_t k = 0; k < raw.metrics.size(); ++k) {
    const auto& m = raw.metrics[k];
    if (raw.values[k].size() != raw.dmu_names.size()) {
      throw ValidationError(ValidationCode::ParseError,
                            "metric '" + m.name + "' has " + std::to_string(raw.values[k].size()) +
                                " values for " + std::to_string(raw.dmu_names.size()) + " DMUs",
                            m.name);
    }
    if (m.likert && (m.likert->lower < 1 || m.likert->lower >= m.likert->upper)) {
      throw ValidationError(ValidationCode::InvalidLikertBounds,
                            "metric '" + m.name + "' has Likert bounds (" +
                                std::to_string(m.likert->lower) + ", " +
                                std::to_string(m.likert->upper) + "); need 1 <= lower < upper",
                            m.name);
    }
    for (std::size_t j = 0; j < raw.dmu_names.size(); ++j) {
      const double v = raw.values[k][j];
      const auto& dmu = raw.dmu_names[j];
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(ValidationCode::NonPositiveValue,
                              "value of '" + m.name + "' for '" + dmu + "' is not a positive finite number",
                              m.name, dmu);
      }
      if (!m.likert) continue;
      if (v < m.likert->lower || v > m.likert->upper) {
        throw ValidationError(ValidationCode::OrdinalOutOfBounds,
                              "value of '" + m.name + "' for '" + dmu + "' lies outside the Likert bounds",
                              m.name, dmu);
      }
      if (v != std::floor(v)) {
        throw ValidationError(ValidationCode::OrdinalNotInteger,
                              "value of '" + m.name + "' for '" + dmu + "' is not an integer Likert point",
                              m.name, dmu);
      }
    }
  }
  return raw;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits one CSV record; double quotes may enclose a field containing
// commas, and "" inside quotes is a literal quote.
std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      cells.push_back(was_quoted ? cell : std::string(trim(cell)));
      cell.clear();
      was_quoted = false;
    } else {
      cell.push_back(c);
    }
  }
  if (quoted) {
    throw ValidationError(ValidationCode::ParseError, "unterminated quoted field", {}, {}, line_no);
  }
  cells.push_back(was_quoted ? cell : std::string(trim(cell)));
  return cells;
}

double parse_number(const std::string& text, std::size_t line_no, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ValidationError(ValidationCode::ParseError,
                          "line " + std::to_string(line_no) + ": " + what + " '" + text +
                              "' is not a decimal number",
                          {}, {}, line_no);
  }
  return v;
}

int parse_bound(const std::string& text, std::size_t line_no, const std::string& metric) {
  const double v = parse_number(text, line_no, "Likert bound of '" + metric + "'");
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw ValidationError(ValidationCode::InvalidLikertBounds,
                          "line " + std::to_string(line_no) + ": Likert bound '" + text +
                              "' of '" + metric + "' is not an integer",
                          metric, {}, line_no);
  }
  return static_cast<int>(v);
}

const std::vector<std::string> kHeaderPrefix = {"metric", "direction", "scale", "lower", "upper", "unit"};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

DecisionMatrix parse_matrix(std::istream& in) {
  DecisionMatrix m;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto cells = split_record(line, line_no);
    if (!have_header) {
      if (cells.size() < kHeaderPrefix.size() + 1) {
        throw ValidationError(ValidationCode::ParseError,
                              "line " + std::to_string(line_no) + ": header needs " +
                                  "metric,direction,scale,lower,upper,unit and at least one DMU",
                              {}, {}, line_no);
      }
      for (std::size_t k = 0; k < kHeaderPrefix.size(); ++k) {
        if (cells[k] != kHeaderPrefix[k]) {
          throw ValidationError(ValidationCode::ParseError,
                                "line " + std::to_string(line_no) + ": header column " +
                                    std::to_string(k + 1) + " must be '" + kHeaderPrefix[k] + "'",
                                {}, {}, line_no);
        }
      }
      m.dmu_names.assign(cells.begin() + static_cast<std::ptrdiff_t>(kHeaderPrefix.size()), cells.end());
      have_header = true;
      continue;
    }
    if (cells.size() != kHeaderPrefix.size() + m.dmu_names.size()) {
      throw ValidationError(ValidationCode::ParseError,
                            "line " + std::to_string(line_no) + ": expected " +
                                std::to_string(kHeaderPrefix.size() + m.dmu_names.size()) +
                                " fields, found " + std::to_string(cells.size()),
                            {}, {}, line_no);
    }
    MetricSpec spec;
    spec.name = cells[0];
    if (cells[1] == "input") {
      spec.direction = Direction::Input;
    } else if (cells[1] == "output") {
      spec.direction = Direction::Output;
    } else {
      throw ValidationError(ValidationCode::ParseError,
                            "line " + std::to_string(line_no) + ": direction '" + cells[1] +
                                "' must be input or output",
                            spec.name, {}, line_no);
    }
    if (cells[2] == "ordinal") {
      spec.likert = LikertBounds{parse_bound(cells[3], line_no, spec.name),
                                 parse_bound(cells[4], line_no, spec.name)};
    } else if (cells[2] == "cardinal") {
      if (!cells[3].empty() || !cells[4].empty()) {
        throw ValidationError(ValidationCode::ParseError,
                              "line " + std::to_string(line_no) + ": cardinal metric '" +
                                  spec.name + "' must leave lower and upper empty",
                              spec.name, {}, line_no);
      }
    } else {
      throw ValidationError(ValidationCode::ParseError,
                            "line " + std::to_string(line_no) + ": scale '" + cells[2] +
                                "' must be cardinal or ordinal",
                            spec.name, {}, line_no);
    }
    spec.unit = cells[5];
    std::vector<double> row;
    row.reserve(m.dmu_names.size());
    for (std::size_t j = 0; j < m.dmu_names.size(); ++j) {
      row.push_back(parse_number(cells[kHeaderPrefix.size() + j], line_no,
                                 "value of '" + spec.name + "' for '" + m.dmu_names[j] + "'"));
    }
    m.metrics.push_back(std::move(spec));
    m.values.push_back(std::move(row));
  }
  if (!have_header) {
    throw ValidationError(ValidationCode::ParseError, "matrix file is empty", {}, {}, line_no);
  }
  return validate_matrix(m);
}

DecisionMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(ValidationCode::ParseError, "cannot open '" + path.string() + "'");
  }
  return parse_matrix(in);
}

void write_matrix_csv(const DecisionMatrix& matrix, std::ostream& out) {
  out << "metric,direction,scale,lower,upper,unit";
  for (const auto& d : matrix.dmu_names) out << ',' << quote_if_needed(d);
  out << '\n';
  for (std::size_t k = 0; k < matrix.metrics.size(); ++k) {
    const auto& m = matrix.metrics[k];
    out << quote_if_needed(m.name) << ',' << to_string(m.direction) << ',';
    if (m.likert) {
      out << "ordinal," << m.likert->lower << ',' << m.likert->upper;
    } else {
      out << "cardinal,,";
    }
    out << ',' << quote_if_needed(m.unit);
    for (double v : matrix.values[k]) out << ',' << format_double(v);
    out << '\n';
  }
}

DecisionMatrix remove_dmus(const DecisionMatrix& matrix, const std::vector<std::string>& names) {
  std::vector<bool> drop(matrix.num_dmus(), false);
  for (const auto& n : names) drop[matrix.dmu_index(n)] = true;
  DecisionMatrix out;
  out.metrics = matrix.metrics;
  out.values.resize(matrix.num_metrics());
  for (std::size_t j = 0; j < matrix.num_dmus(); ++j) {
    if (drop[j]) continue;
    out.dmu_names.push_back(matrix.dmu_names[j]);
    for (std::size_t k = 0; k < matrix.num_metrics(); ++k) out.values[k].push_back(matrix.values[k][j]);
  }
  return out;
}

DecisionMatrix rescale_metric(const DecisionMatrix& matrix, std::size_t metric, double factor) {
  DecisionMatrix out = matrix;
  for (double& v : out.values.at(metric)) v *= factor;
  return out;
}

std::string matrix_digest(const DecisionMatrix& matrix) {
  std::ostringstream csv;
  write_matrix_csv(matrix, csv);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : csv.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ordvga
