#include "hcr/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hcr/errors.hpp"
#include "node_update.hpp"

namespace hcr {

Upwind local_courant(double u, double dt, double h, std::size_t node) {
  const Upwind up = detail::upwind_of(u, dt, h);
  if (!(up.k <= 1.0)) {
    throw CflError(node, up.k);
  }
  return up;
}

double max_cfl(std::span<const double> u, double dt, double h) noexcept {
  double worst = 0.0;
  for (double v : u) worst = std::max(worst, std::abs(v) * dt / h);
  return worst;
}

double velocity_gradient(std::span<const double> u, std::size_t i, double h, BoundaryKind bc) {
  const std::size_t n = u.size();
  if (i >= n) throw std::out_of_range("velocity_gradient: node index out of range");
  return (u[detail::neighbour(i, +1, n, bc)] - u[detail::neighbour(i, -1, n, bc)]) / (2.0 * h);
}

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

void validate(const GridField& state, const VelocityField& vel, const StepParams& params) {
  const std::size_t n = state.f.size();
  if (n < 3) throw std::invalid_argument("grid needs at least 3 nodes");
  if (state.d.size() != n) throw std::invalid_argument("f and d have different lengths");
  if (vel.u.size() != n) throw std::invalid_argument("velocity length differs from grid");
  if (!(state.h > 0.0) || !std::isfinite(state.h)) {
    throw std::invalid_argument("grid spacing must be positive and finite");
  }
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) {
    throw std::invalid_argument("time step must be positive and finite");
  }
  if (!all_finite(state.f) || !all_finite(state.d)) {
    throw std::invalid_argument("grid field contains non-finite values");
  }
  if (!all_finite(vel.u)) throw std::invalid_argument("velocity contains non-finite values");
  for (std::size_t i = 0; i < n; ++i) local_courant(vel.u[i], params.dt, state.h, i);
}

void step_into(const GridField& state, const VelocityField& vel, const StepParams& params,
               const Scheme& scheme, BoundaryKind bc, GridField& out) {
  const std::size_t n = state.size();
  out.f.resize(n);
  out.d.resize(n);
  out.h = state.h;
  const std::span<const double> u(vel.u);
  const double dt = params.dt;
  std::atomic<bool> failed{false};

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      const InterpResult r = detail::advance_node(state, u, dt, scheme, bc, i);
      out.f[i] = r.value;
      out.d[i] = r.deriv;
      if (!std::isfinite(r.value) || !std::isfinite(r.deriv)) failed = true;
    } catch (...) {
      failed = true;
    }
  }

  if (failed) throw DivergenceError(0, "non-finite state after step");
}

GridField step(const GridField& state, const VelocityField& vel, const StepParams& params,
               const Scheme& scheme, BoundaryKind bc) {
  validate(state, vel, params);
  GridField out;
  step_into(state, vel, params, scheme, bc, out);
  return out;
}

GridField run(GridField state, const VelocityField& vel, const StepParams& params,
              const Scheme& scheme, BoundaryKind bc, std::size_t n_steps,
              std::size_t snapshot_every, const Observer& observer) {
  validate(state, vel, params);
  if (observer) observer(0, state);

  GridField next;
  for (std::size_t s = 1; s <= n_steps; ++s) {
    try {
      step_into(state, vel, params, scheme, bc, next);
    } catch (const DivergenceError&) {
      throw DivergenceError(s, "non-finite state after step");
    }
    std::swap(state, next);
    const bool cadence = snapshot_every != 0 && s % snapshot_every == 0;
    if (observer && (cadence || s == n_steps)) observer(s, state);
  }
  return state;
}

}  // namespace hcr
