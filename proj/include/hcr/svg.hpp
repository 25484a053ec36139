// Dependency-free SVG 1.1 line plots.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "hcr/diagnostics.hpp"
#include "hcr/solver.hpp"

namespace hcr {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

enum class PlotKind {
  Profile,    // f against x
  Indicator,  // p against the half-cell position
  Extrema,    // f_max and f_min against step
  Error,      // l1_error against step
};

struct LabeledSnapshot {
  std::string label;
  std::size_t step = 0;
  GridField state;
};

struct LabeledSummary {
  std::string label;
  std::vector<DiagnosticsRecord> records;
};

// Profile or Indicator; throws std::invalid_argument for other kinds or no runs.
Plot snapshot_plot(PlotKind kind, std::span<const LabeledSnapshot> runs);

// Extrema (two series per run) or Error (records without l1_error skipped).
Plot summary_plot(PlotKind kind, std::span<const LabeledSummary> runs);

// Standalone document with axes, one polyline per series and a legend.
// Output depends only on the input.  Throws std::invalid_argument when the
// plot has no series or no points.
std::string render_svg(const Plot& plot);

}  // namespace hcr
