#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hcr {

struct DiagnosticsRecord {
  std::size_t step = 0;
  std::optional<double> l1_error;
  double f_max = 0.0;
  double f_min = 0.0;
  std::size_t pos_regions = 0;
  std::size_t neg_regions = 0;
};

// Mean absolute deviation.  Throws std::invalid_argument on length mismatch
// or empty input.
double l1_error(std::span<const double> f, std::span<const double> exact);

// Sign of successive differences as +1/2, 0, -1/2 (N-1 entries).  A
// difference whose magnitude is <= dead_band counts as zero; the default of 0
// is the exact comparison.
std::vector<double> convexity_indicator(std::span<const double> f, double dead_band = 0.0);

struct SignRegions {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const SignRegions&, const SignRegions&) = default;
};

// Same rule including the seam pair (f[0] - f[N-1]), N entries; for periodic
// fields.
std::vector<double> convexity_indicator_periodic(std::span<const double> f,
                                                 double dead_band = 0.0);

// Maximal runs of +1/2 and of -1/2; zeros separate runs.  With cyclic = true
// the last entry is adjacent to the first, so a run crossing the seam counts
// once.
SignRegions count_sign_regions(std::span<const double> p, bool cyclic = false) noexcept;

struct Extrema {
  double max;
  double min;
};

// Throws std::invalid_argument on empty input.
Extrema field_extrema(std::span<const double> f);

// Extrema and region counts of f; l1_error when an exact profile is given.
// Periodic fields use the cyclic indicator and cyclic run counting.
DiagnosticsRecord diagnose(std::size_t step, std::span<const double> f,
                           std::optional<std::span<const double>> exact = std::nullopt,
                           bool periodic = false);

}  // namespace hcr
