#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "finger/simulator.hpp"

namespace finger::plot {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

struct Figure {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Standalone SVG line chart with axes, ticks and a legend. Each series is a
/// <polyline class="series" data-name="..."> element.
std::string render_svg(const Figure& fig);

/// The five standard figures of a run: angle response, angle error,
/// virtual-control error, reference-vs-actual overlay and Lyapunov value.
/// Angles are plotted in degrees.
std::vector<std::pair<std::string, Figure>> standard_figures(const Trace& trace);

/// Writes standard_figures() into out_dir as <name>.svg; returns the paths.
/// Throws std::runtime_error on I/O failure.
std::vector<std::filesystem::path> write_standard_figures(const Trace& trace,
                                                          const std::filesystem::path& out_dir);

}  // namespace finger::plot
