#include "hcr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcr {

namespace {

constexpr std::size_t kTriangleHalfBase = 15;  // base 30h
constexpr std::size_t kSquareWidth = 26;

// Grid displacement u t / h for the unit-speed periodic cases.  Values within
// rounding of an integer are snapped so that nodes lying exactly on a
// discontinuity of the ideal profile are classified consistently.
double displacement_cells(double t, double h) {
  const double disp = t / h;
  const double nearest = std::round(disp);
  return std::abs(disp - nearest) < 1e-9 ? nearest : disp;
}

std::vector<double> centered_differences(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double right = f[(i + 1) % n];
    const double left = f[(i + n - 1) % n];
    d[i] = (right - left) / (2.0 * h);
  }
  return d;
}

double wrap_centered(double s, double period) {
  return s - period * std::floor((s + 0.5 * period) / period);
}

double wrap_positive(double s, double period) { return s - period * std::floor(s / period); }

double tent(double s) {
  return std::max(0.0, 1.0 - std::abs(s) / static_cast<double>(kTriangleHalfBase));
}

double hat(double s) { return s >= 0.0 && s < static_cast<double>(kSquareWidth) ? 1.0 : 0.0; }

// Samples profile(offset of node i from the pulse origin) on a periodic grid.
template <typename Profile>
std::vector<double> sample_periodic(std::size_t n, double origin, double disp, Profile profile,
                                    bool centered) {
  std::vector<double> f(n);
  const double period = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) - origin - disp;
    f[i] = profile(centered ? wrap_centered(s, period) : wrap_positive(s, period));
  }
  return f;
}

void require_points(std::size_t n, std::size_t minimum, const char* who) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(who) + ": needs at least " + std::to_string(minimum) +
                                " grid points");
  }
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::Sine:
      return "sine";
    case ExperimentKind::Triangle:
      return "triangle";
    case ExperimentKind::Square:
      return "square";
    case ExperimentKind::ReducedAlpha:
      return "reduced-alpha";
    case ExperimentKind::Extreme:
      return "extreme";
  }
  return "unknown";
}

std::size_t default_points(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::Sine:
      return 100;
    case ExperimentKind::Triangle:
    case ExperimentKind::Square:
    case ExperimentKind::ReducedAlpha:
      return 200;
    case ExperimentKind::Extreme:
      return 150;
  }
  return 100;
}

ExperimentSetup init_sine(std::size_t n) {
  require_points(n, 16, "init_sine");
  const double h = 1.0 / static_cast<double>(n);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto profile = [n, h](double disp) {
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = 0.5 * std::cos(2.0 * two_pi * h * (static_cast<double>(i) - disp));
    }
    return f;
  };

  ExperimentSetup s;
  s.state0.h = h;
  s.state0.f = profile(0.0);
  s.state0.d.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.state0.d[i] = -two_pi * std::sin(2.0 * two_pi * h * static_cast<double>(i));
  }
  s.vel.u.assign(n, 1.0);
  s.bc = BoundaryKind::Periodic;
  s.exact_at = [profile, h](double t) { return profile(displacement_cells(t, h)); };
  return s;
}

ExperimentSetup init_triangle(std::size_t n) {
  require_points(n, 64, "init_triangle");
  const double h = 1.0 / static_cast<double>(n);
  const double apex = static_cast<double>(n / 4);

  ExperimentSetup s;
  s.state0.h = h;
  s.state0.f = sample_periodic(n, apex, 0.0, tent, true);
  s.state0.d = centered_differences(s.state0.f, h);
  s.vel.u.assign(n, 1.0);
  s.bc = BoundaryKind::Periodic;
  s.exact_at = [n, apex, h](double t) {
    return sample_periodic(n, apex, displacement_cells(t, h), tent, true);
  };
  return s;
}

ExperimentSetup init_square(std::size_t n) {
  require_points(n, 64, "init_square");
  const double h = 1.0 / static_cast<double>(n);
  const double left = static_cast<double>(n / 5);

  ExperimentSetup s;
  s.state0.h = h;
  s.state0.f = sample_periodic(n, left, 0.0, hat, false);
  s.state0.d = centered_differences(s.state0.f, h);
  s.vel.u.assign(n, 1.0);
  s.bc = BoundaryKind::Periodic;
  s.exact_at = [n, left, h](double t) {
    return sample_periodic(n, left, displacement_cells(t, h), hat, false);
  };
  return s;
}

std::vector<double> smooth_3point(std::span<const double> g, double eps, std::size_t m) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("smooth_3point: eps must lie in (0, 1)");
  }
  std::vector<double> cur(g.begin(), g.end());
  const std::size_t n = cur.size();
  if (n == 0) return cur;
  std::vector<double> next(n);
  for (std::size_t pass = 0; pass < m; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      const double left = cur[i > 0 ? i - 1 : 0];
      const double right = cur[i + 1 < n ? i + 1 : n - 1];
      // (1 - eps) g + eps (l + r) / 2, arranged so constants are fixed exactly.
      next[i] = cur[i] + eps * (0.5 * (left + right) - cur[i]);
    }
    std::swap(cur, next);
  }
  return cur;
}

ExperimentSetup init_extreme(std::size_t n) {
  require_points(n, 120, "init_extreme");
  const double h = 1.0 / static_cast<double>(n);

  std::vector<double> f(n, 0.0);
  std::vector<double> u(n, 0.1);
  for (std::size_t i = 5; i <= 67; ++i) f[i] = 1.0;
  for (std::size_t i = 0; i <= 71; ++i) u[i] = 1.0;
  f = smooth_3point(f, 0.05, 2);
  u = smooth_3point(u, 0.1, 2);

  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] == 0.0 || f[i] == 1.0) continue;
    const double right = f[i + 1 < n ? i + 1 : n - 1];
    const double left = f[i > 0 ? i - 1 : 0];
    d[i] = (right - left) / (2.0 * h);
  }

  ExperimentSetup s;
  s.state0 = GridField{std::move(f), std::move(d), h};
  s.vel.u = std::move(u);
  s.bc = BoundaryKind::FixedEdges;
  return s;
}

ExperimentSetup make_setup(ExperimentKind kind, std::size_t n) {
  switch (kind) {
    case ExperimentKind::Sine:
      return init_sine(n);
    case ExperimentKind::Triangle:
      return init_triangle(n);
    case ExperimentKind::Square:
    case ExperimentKind::ReducedAlpha:
      return init_square(n);
    case ExperimentKind::Extreme:
      return init_extreme(n);
  }
  throw std::invalid_argument("unknown experiment kind");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (!(config.cfl > 0.0 && config.cfl <= 1.0)) {
    throw std::invalid_argument("run_experiment: cfl must lie in (0, 1]");
  }
  if (config.n_points < 16) {
    throw std::invalid_argument("run_experiment: n_points must be at least 16");
  }

  ExperimentResult result;
  result.setup = make_setup(config.kind, config.n_points);
  result.scheme = config.kind == ExperimentKind::ReducedAlpha ? Scheme::hybrid(config.alpha_scale)
                                                              : config.scheme;
  const auto& setup = result.setup;
  const double umax = *std::max_element(setup.vel.u.begin(), setup.vel.u.end(),
                                        [](double a, double b) { return std::abs(a) < std::abs(b); });
  result.dt = config.cfl * setup.state0.h / std::abs(umax);

  const StepParams params{result.dt};
  const bool periodic = setup.bc == BoundaryKind::Periodic;
  auto observe = [&](std::size_t step, const GridField& state) {
    if (setup.exact_at) {
      const std::vector<double> exact = setup.exact_at(static_cast<double>(step) * result.dt);
      result.records.push_back(
          diagnose(step, state.f, std::span<const double>(exact), periodic));
    } else {
      result.records.push_back(diagnose(step, state.f, std::nullopt, periodic));
    }
    result.snapshots.push_back({step, state});
  };
  run(setup.state0, setup.vel, params, result.scheme, setup.bc, config.n_steps,
      config.snapshot_every, observe);
  return result;
}

}  // namespace hcr
