#include "hcr/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hcr {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;  // room for the legend
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void pad() {
    if (hi - lo <= 0.0) {
      const double w = std::max(std::abs(lo) * 0.05, 0.5);
      lo -= w;
      hi += w;
    } else {
      const double w = 0.05 * (hi - lo);
      lo -= w;
      hi += w;
    }
  }
};

Series indicator_series(const LabeledSnapshot& run) {
  Series s{run.label, {}, {}};
  const std::vector<double> p = convexity_indicator(run.state.f);
  for (std::size_t i = 0; i < p.size(); ++i) {
    s.x.push_back((static_cast<double>(i) + 0.5) * run.state.h);
    s.y.push_back(p[i]);
  }
  return s;
}

}  // namespace

Plot snapshot_plot(PlotKind kind, std::span<const LabeledSnapshot> runs) {
  if (runs.empty()) throw std::invalid_argument("snapshot_plot: no runs");
  Plot plot;
  plot.x_label = "x";
  switch (kind) {
    case PlotKind::Profile:
      plot.title = "profile at step " + std::to_string(runs.front().step);
      plot.y_label = "f";
      for (const LabeledSnapshot& run : runs) {
        Series s{run.label, {}, run.state.f};
        for (std::size_t i = 0; i < run.state.size(); ++i) {
          s.x.push_back(static_cast<double>(i) * run.state.h);
        }
        plot.series.push_back(std::move(s));
      }
      break;
    case PlotKind::Indicator:
      plot.title = "convexity indicator at step " + std::to_string(runs.front().step);
      plot.y_label = "p";
      for (const LabeledSnapshot& run : runs) plot.series.push_back(indicator_series(run));
      break;
    default:
      throw std::invalid_argument("snapshot_plot: kind needs a summary");
  }
  return plot;
}

Plot summary_plot(PlotKind kind, std::span<const LabeledSummary> runs) {
  if (runs.empty()) throw std::invalid_argument("summary_plot: no runs");
  Plot plot;
  plot.x_label = "step";
  switch (kind) {
    case PlotKind::Extrema:
      plot.title = "field extrema";
      plot.y_label = "f";
      for (const LabeledSummary& run : runs) {
        Series hi{run.label + " max", {}, {}};
        Series lo{run.label + " min", {}, {}};
        for (const DiagnosticsRecord& r : run.records) {
          hi.x.push_back(static_cast<double>(r.step));
          hi.y.push_back(r.f_max);
          lo.x.push_back(static_cast<double>(r.step));
          lo.y.push_back(r.f_min);
        }
        plot.series.push_back(std::move(hi));
        plot.series.push_back(std::move(lo));
      }
      break;
    case PlotKind::Error:
      plot.title = "L1 error";
      plot.y_label = "error";
      for (const LabeledSummary& run : runs) {
        Series s{run.label, {}, {}};
        for (const DiagnosticsRecord& r : run.records) {
          if (!r.l1_error) continue;
          s.x.push_back(static_cast<double>(r.step));
          s.y.push_back(*r.l1_error);
        }
        plot.series.push_back(std::move(s));
      }
      break;
    default:
      throw std::invalid_argument("summary_plot: kind needs a snapshot");
  }
  return plot;
}

std::string render_svg(const Plot& plot) {
  if (plot.series.empty()) throw std::invalid_argument("render_svg: no series");
  Range xr;
  Range yr;
  std::size_t points = 0;
  for (const Series& s : plot.series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("render_svg: x/y length mismatch");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xr.add(s.x[i]);
      yr.add(s.y[i]);
    }
    points += s.x.size();
  }
  if (points == 0 || !(xr.lo <= xr.hi)) throw std::invalid_argument("render_svg: no data");
  if (xr.hi == xr.lo) xr.pad();
  yr.pad();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) +
         "\" height=\"" + fixed(kHeight) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " +
         fixed(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" " +
         "font-family=\"sans-serif\" font-size=\"15\">" + escape(plot.title) + "</text>\n";

  // Axes box and ticks.
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  svg += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(pw) +
         "\" height=\"" + fixed(ph) + "\"/>\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = kLeft + pw * t / kTicks;
    const double fy = kTop + ph * t / kTicks;
    svg += "<line x1=\"" + fixed(fx) + "\" y1=\"" + fixed(kTop + ph) + "\" x2=\"" + fixed(fx) +
           "\" y2=\"" + fixed(kTop + ph + 5) + "\"/>\n";
    svg += "<line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(fy) + "\" x2=\"" + fixed(kLeft) +
           "\" y2=\"" + fixed(fy) + "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double xv = xr.lo + (xr.hi - xr.lo) * t / kTicks;
    const double yv = yr.hi - (yr.hi - yr.lo) * t / kTicks;
    svg += "<text x=\"" + fixed(kLeft + pw * t / kTicks) + "\" y=\"" + fixed(kTop + ph + 18) +
           "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
    svg += "<text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(kTop + ph * t / kTicks + 4) +
           "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
  }
  svg += "<text x=\"" + fixed(kLeft + pw / 2) + "\" y=\"" + fixed(kHeight - 10) +
         "\" text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fixed(kTop + ph / 2) + "\" text-anchor=\"middle\" " +
         "transform=\"rotate(-90 16 " + fixed(kTop + ph / 2) + ")\">" + escape(plot.y_label) +
         "</text>\n";
  svg += "</g>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const Series& s = plot.series[k];
    const char* color = kPalette[k % kPalette.size()];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!first) svg += ' ';
      svg += fixed(sx(s.x[i])) + "," + fixed(sy(s.y[i]));
      first = false;
    }
    svg += "\"/>\n";

    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(k);
    const double lx = kWidth - kRight + 12.0;
    svg += "<line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(ly) + "\" x2=\"" + fixed(lx + 24) +
           "\" y2=\"" + fixed(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fixed(lx + 30) + "\" y=\"" + fixed(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace hcr
