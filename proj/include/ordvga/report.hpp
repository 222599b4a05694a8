#pragma once

#include <filesystem>
#include <string>

#include "ordvga/pipeline.hpp"

namespace ordvga {

// JSON document holding every report field at full double precision,
// plus a "presentation" block rounded to three decimals. The layout is
// described by docs/report.schema.json.
std::string report_to_json(const AssessmentReport& report);

// Inverse of report_to_json; the presentation block is ignored. Throws
// std::runtime_error on malformed input.
AssessmentReport report_from_json(const std::string& text);

// Aligned text table with rows R1 to R8: goal price and gap, prices,
// adjustments and intensities, metric virtual prices, benchmark and
// targets, virtual inputs, virtual outputs, pairwise gaps. Stage 1
// columns come first, then stage 2 columns.
std::string format_table(const AssessmentReport& report);

// Writes report_to_json to path. Throws std::runtime_error on I/O
// failure.
void emit_report(const AssessmentReport& report, const std::filesystem::path& path);
AssessmentReport read_report(const std::filesystem::path& path);

}  // namespace ordvga
