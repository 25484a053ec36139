#include "hcr/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcr {

double l1_error(std::span<const double> f, std::span<const double> exact) {
  if (f.size() != exact.size()) throw std::invalid_argument("l1_error: length mismatch");
  if (f.empty()) throw std::invalid_argument("l1_error: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += std::abs(f[i] - exact[i]);
  return sum / static_cast<double>(f.size());
}

namespace {

double indicator(double left, double right, double dead_band) noexcept {
  const double diff = right - left;
  if (diff > dead_band) return 0.5;
  if (diff < -dead_band) return -0.5;
  return 0.0;
}

}  // namespace

std::vector<double> convexity_indicator(std::span<const double> f, double dead_band) {
  std::vector<double> p;
  if (f.size() < 2) return p;
  p.reserve(f.size() - 1);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) p.push_back(indicator(f[i], f[i + 1], dead_band));
  return p;
}

std::vector<double> convexity_indicator_periodic(std::span<const double> f, double dead_band) {
  std::vector<double> p = convexity_indicator(f, dead_band);
  if (f.size() >= 2) p.push_back(indicator(f.back(), f.front(), dead_band));
  return p;
}

SignRegions count_sign_regions(std::span<const double> p, bool cyclic) noexcept {
  SignRegions r;
  double prev = 0.0;
  for (double v : p) {
    if (v > 0.0 && !(prev > 0.0)) ++r.positive;
    if (v < 0.0 && !(prev < 0.0)) ++r.negative;
    prev = v;
  }
  if (cyclic && !p.empty()) {
    const double first = p.front();
    const double last = p.back();
    if (first > 0.0 && last > 0.0 && r.positive > 1) --r.positive;
    if (first < 0.0 && last < 0.0 && r.negative > 1) --r.negative;
  }
  return r;
}

Extrema field_extrema(std::span<const double> f) {
  if (f.empty()) throw std::invalid_argument("field_extrema: empty input");
  const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  return {*hi, *lo};
}

DiagnosticsRecord diagnose(std::size_t step, std::span<const double> f,
                           std::optional<std::span<const double>> exact, bool periodic) {
  DiagnosticsRecord rec;
  rec.step = step;
  if (exact) rec.l1_error = l1_error(f, *exact);
  const Extrema e = field_extrema(f);
  rec.f_max = e.max;
  rec.f_min = e.min;
  const SignRegions regions =
      periodic ? count_sign_regions(convexity_indicator_periodic(f), true)
               : count_sign_regions(convexity_indicator(f));
  rec.pos_regions = regions.positive;
  rec.neg_regions = regions.negative;
  return rec;
}

}  // namespace hcr
