#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ordvga/pipeline.hpp"
#include "ordvga/stage.hpp"

namespace ordvga {

// Scatter of (alpha, beta) pairs in the virtual input / virtual output
// plane. Both axes share one scale so the diagonal runs at 45 degrees.
struct PlotSpec {
  Stage stage = Stage::BestPractice;
  std::string title;
  std::vector<TechnologyPoint> points;
  bool diagonal = true;
  // Upper end of both axes: largest coordinate times 1.05, or 1 with no
  // points.
  double axis_max = 1.0;
};

// Plot of one assessment: every comparison DMU, the assessed DMU and the
// target point T.
PlotSpec make_plot_spec(const StageResult& result);

// Smallest valid axis_max for a point set.
double plot_axis_max(const std::vector<TechnologyPoint>& points);

// Standalone SVG document. Coordinates are printed with two decimals so
// identical specs give identical bytes.
std::string render_svg(const PlotSpec& plot);

// Pixel position of a data point in the document drawn by render_svg.
struct PixelPoint {
  double x = 0.0;
  double y = 0.0;
};
PixelPoint plot_pixel(const PlotSpec& plot, double alpha, double beta);

// Writes render_svg to path. Throws std::runtime_error on I/O failure.
void emit_plot(const PlotSpec& plot, const std::filesystem::path& path);

}  // namespace ordvga
