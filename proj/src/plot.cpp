#include "ordvga/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ordvga {

namespace {

constexpr double kMargin = 70.0;
constexpr double kSide = 420.0;
constexpr double kWidth = kMargin * 2.0 + kSide;
constexpr double kTicks = 5;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

double plot_axis_max(const std::vector<TechnologyPoint>& points) {
  double m = 0.0;
  for (const auto& p : points) m = std::max({m, p.alpha, p.beta});
  return m > 0.0 ? m * 1.05 : 1.0;
}

PlotSpec make_plot_spec(const StageResult& result) {
  PlotSpec spec;
  spec.stage = result.stage;
  spec.title = std::string(result.stage == Stage::BestPractice ? "Stage 1" : "Stage 2") + " assessment of " + result.dmu;
  spec.points = virtual_technology_set(result);
  spec.axis_max = plot_axis_max(spec.points);
  return spec;
}

PixelPoint plot_pixel(const PlotSpec& plot, double alpha, double beta) {
  const double scale = kSide / plot.axis_max;
  return {kMargin + alpha * scale, kMargin + kSide - beta * scale};
}

std::string render_svg(const PlotSpec& plot) {
  if (!(plot.axis_max > 0.0)) throw std::invalid_argument("plot axis_max must be positive");
  std::string s;
  const std::string w = fmt(kWidth);
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + w + "\" viewBox=\"0 0 " + w + " " +
       w + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + w + "\" fill=\"white\"/>\n";
  if (!plot.title.empty()) {
    s += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"30.00\" text-anchor=\"middle\" font-size=\"16\">" +
         escape(plot.title) + "</text>\n";
  }

  const PixelPoint origin = plot_pixel(plot, 0.0, 0.0);
  const PixelPoint corner = plot_pixel(plot, plot.axis_max, plot.axis_max);
  s += "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + fmt(origin.x) + "\" y1=\"" + fmt(origin.y) + "\" x2=\"" + fmt(corner.x) + "\" y2=\"" +
       fmt(origin.y) + "\"/>\n";
  s += "<line x1=\"" + fmt(origin.x) + "\" y1=\"" + fmt(origin.y) + "\" x2=\"" + fmt(origin.x) + "\" y2=\"" +
       fmt(corner.y) + "\"/>\n";
  for (int k = 0; k <= kTicks; ++k) {
    const double v = plot.axis_max * k / kTicks;
    const PixelPoint px = plot_pixel(plot, v, v);
    s += "<line x1=\"" + fmt(px.x) + "\" y1=\"" + fmt(origin.y) + "\" x2=\"" + fmt(px.x) + "\" y2=\"" +
         fmt(origin.y + 5) + "\"/>\n";
    s += "<line x1=\"" + fmt(origin.x - 5) + "\" y1=\"" + fmt(px.y) + "\" x2=\"" + fmt(origin.x) + "\" y2=\"" +
         fmt(px.y) + "\"/>\n";
  }
  s += "</g>\n";
  s += "<g id=\"ticks\" font-size=\"11\" fill=\"black\">\n";
  for (int k = 0; k <= kTicks; ++k) {
    const double v = plot.axis_max * k / kTicks;
    const PixelPoint px = plot_pixel(plot, v, v);
    s += "<text x=\"" + fmt(px.x) + "\" y=\"" + fmt(origin.y + 18) + "\" text-anchor=\"middle\">" + tick_label(v) +
         "</text>\n";
    s += "<text x=\"" + fmt(origin.x - 8) + "\" y=\"" + fmt(px.y + 4) + "\" text-anchor=\"end\">" + tick_label(v) +
         "</text>\n";
  }
  s += "</g>\n";
  s += "<text x=\"" + fmt(kMargin + kSide / 2) + "\" y=\"" + fmt(kWidth - 20) +
       "\" text-anchor=\"middle\" font-size=\"13\">vInput($)</text>\n";
  s += "<text x=\"20.00\" y=\"" + fmt(kMargin + kSide / 2) + "\" text-anchor=\"middle\" font-size=\"13\" " +
       "transform=\"rotate(-90 20.00 " + fmt(kMargin + kSide / 2) + ")\">vOutput($)</text>\n";

  if (plot.diagonal) {
    s += "<line id=\"diagonal\" x1=\"" + fmt(origin.x) + "\" y1=\"" + fmt(origin.y) + "\" x2=\"" + fmt(corner.x) +
         "\" y2=\"" + fmt(corner.y) + "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  s += "<g id=\"points\" font-size=\"12\">\n";
  for (const auto& p : plot.points) {
    const PixelPoint px = plot_pixel(plot, p.alpha, p.beta);
    const std::string cls = to_string(p.role);
    const std::string cx = fmt(px.x);
    const std::string cy = fmt(px.y);
    std::string fill = "black";
    switch (p.role) {
      case TechnologyPoint::Role::Assessed:
        fill = "crimson";
        s += "<circle class=\"" + cls + "\" cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"6\" fill=\"crimson\"/>\n";
        break;
      case TechnologyPoint::Role::Peer:
        fill = "navy";
        s += "<circle class=\"" + cls + "\" cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"4\" fill=\"navy\"/>\n";
        break;
      case TechnologyPoint::Role::Other:
        s += "<circle class=\"" + cls + "\" cx=\"" + cx + "\" cy=\"" + cy +
             "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
        break;
      case TechnologyPoint::Role::Target:
        fill = "darkgreen";
        s += "<rect class=\"" + cls + "\" x=\"" + fmt(px.x - 5) + "\" y=\"" + fmt(px.y - 5) +
             "\" width=\"10.00\" height=\"10.00\" fill=\"none\" stroke=\"darkgreen\" stroke-width=\"2\"/>\n";
        break;
    }
    s += "<text class=\"" + cls + "\" x=\"" + fmt(px.x + 7) + "\" y=\"" + fmt(px.y - 7) + "\" fill=\"" + fill +
         "\">" + escape(p.label) + "</text>\n";
  }
  s += "</g>\n";
  s += "</svg>\n";
  return s;
}

void emit_plot(const PlotSpec& plot, const std::filesystem::path& path) {
  const std::string svg = render_svg(plot);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << svg;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace ordvga
