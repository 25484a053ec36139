#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hcr/kernels.hpp"

namespace hcr {

// Nodal values and nodal spatial derivatives on a uniform grid.
struct GridField {
  std::vector<double> f;
  std::vector<double> d;
  double h = 1.0;

  std::size_t size() const noexcept { return f.size(); }
  friend bool operator==(const GridField&, const GridField&) = default;
};

// Nodal advection velocities, constant in time.
struct VelocityField {
  std::vector<double> u;
};

enum class BoundaryKind {
  Periodic,
  // Ghost nodes clone the edge node's f, d and u.
  FixedEdges,
};

struct StepParams {
  double dt = 0.0;
};

struct Upwind {
  double k;    // |u| dt / h, in [0, 1]
  int offset;  // +1 for u < 0, -1 otherwise
};

// Throws CflError(node) when |u| dt / h > 1.
Upwind local_courant(double u, double dt, double h, std::size_t node = 0);

double max_cfl(std::span<const double> u, double dt, double h) noexcept;

// Centered (u[i+1] - u[i-1]) / 2h with neighbours resolved by the boundary rule.
double velocity_gradient(std::span<const double> u, std::size_t i, double h, BoundaryKind bc);

// Throws std::invalid_argument on inconsistent sizes, N < 3, h <= 0 or dt <= 0,
// and CflError when the velocity field violates the CFL condition.
void validate(const GridField& state, const VelocityField& vel, const StepParams& params);

// One semi-Lagrangian step, parallel over nodes.  Reads only `state`; the
// result is bitwise identical to serial::step for any thread count.  Throws
// DivergenceError (step index 0) if the new state is not finite.
GridField step(const GridField& state, const VelocityField& vel, const StepParams& params,
               const Scheme& scheme, BoundaryKind bc);

// Same as step() but writes into `out`, which is resized as needed.  `out`
// must not alias `state`.
void step_into(const GridField& state, const VelocityField& vel, const StepParams& params,
               const Scheme& scheme, BoundaryKind bc, GridField& out);

namespace serial {

// Single-threaded reference kept for testing and benchmarking.
GridField step(const GridField& state, const VelocityField& vel, const StepParams& params,
               const Scheme& scheme, BoundaryKind bc);

}  // namespace serial

using Observer = std::function<void(std::size_t step, const GridField& state)>;

// Applies step() n_steps times.  The observer sees step 0, every
// snapshot_every-th step and the final step (each at most once).
// snapshot_every == 0 observes only the first and last state.  Step failures
// are rethrown as DivergenceError carrying the failing step index.
GridField run(GridField state, const VelocityField& vel, const StepParams& params,
              const Scheme& scheme, BoundaryKind bc, std::size_t n_steps,
              std::size_t snapshot_every, const Observer& observer = {});

}  // namespace hcr
