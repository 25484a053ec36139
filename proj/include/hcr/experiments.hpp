#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hcr/diagnostics.hpp"
#include "hcr/kernels.hpp"
#include "hcr/solver.hpp"

namespace hcr {

enum class ExperimentKind { Sine, Triangle, Square, ReducedAlpha, Extreme };

std::string_view experiment_name(ExperimentKind kind) noexcept;

// Grid size used when a configuration does not set one.
std::size_t default_points(ExperimentKind kind) noexcept;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Sine;
  std::size_t n_points = 100;
  double cfl = 0.2;
  std::size_t n_steps = 0;
  Scheme scheme = Scheme::hybrid();
  // Only used by ReducedAlpha, which runs Square with Scheme::hybrid(alpha_scale).
  double alpha_scale = 1.0;
  std::size_t snapshot_every = 1;
};

struct ExperimentSetup {
  GridField state0;
  VelocityField vel;
  BoundaryKind bc = BoundaryKind::Periodic;
  // Analytic solution sampled at the nodes at time t; empty when none exists.
  std::function<std::vector<double>(double t)> exact_at;
};

// 0.5 cos(4 pi x) on the periodic unit interval, h = 1/N, u = 1, analytic d.
ExperimentSetup init_sine(std::size_t n);

// Tent of base 30h and height 1 with its apex on node N/4; d from centered
// differences.  Throws std::invalid_argument for N < 64.
ExperimentSetup init_triangle(std::size_t n);

// Top hat of 26 nodes and height 1 starting at node N/5; d from centered
// differences.  Throws std::invalid_argument for N < 64.
ExperimentSetup init_square(std::size_t n);

// m passes of g_i <- (1 - eps) g_i + eps (g_{i+1} + g_{i-1}) / 2 with edge-clone
// neighbours.  Throws std::invalid_argument unless 0 < eps < 1.
std::vector<double> smooth_3point(std::span<const double> g, double eps, std::size_t m);

// Mollified top hat (nodes 5..67) advected through a mollified velocity step
// (1 up to node 71, 0.1 beyond).  Fixed edges, no analytic solution.
// Throws std::invalid_argument for N < 120.
ExperimentSetup init_extreme(std::size_t n);

ExperimentSetup make_setup(ExperimentKind kind, std::size_t n);

struct Snapshot {
  std::size_t step;
  GridField state;
};

struct ExperimentResult {
  ExperimentSetup setup;
  Scheme scheme = Scheme::hybrid();
  double dt = 0.0;
  std::vector<DiagnosticsRecord> records;
  std::vector<Snapshot> snapshots;
};

// dt = cfl h / max|u|.  Records diagnostics and keeps the field at every
// observed step (see hcr::run).  Throws std::invalid_argument on an invalid
// configuration; solver errors propagate.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace hcr
