// Per-node update shared by the parallel and serial step loops.
#pragma once

#include <cmath>
#include <cstddef>
#include <span>

#include "hcr/kernels.hpp"
#include "hcr/solver.hpp"

namespace hcr::detail {

// Index of node i + offset (offset = +-1) under the boundary rule.  For
// FixedEdges the ghost beyond an edge is the edge node itself.
inline std::size_t neighbour(std::size_t i, int offset, std::size_t n, BoundaryKind bc) noexcept {
  if (offset > 0) {
    if (i + 1 < n) return i + 1;
    return bc == BoundaryKind::Periodic ? 0 : i;
  }
  if (i > 0) return i - 1;
  return bc == BoundaryKind::Periodic ? n - 1 : i;
}

inline Upwind upwind_of(double u, double dt, double h) noexcept {
  return {std::abs(u) * dt / h, u < 0.0 ? 1 : -1};
}

// New (f, d) at node i.  Assumes CFL was validated.
inline InterpResult advance_node(const GridField& state, std::span<const double> u,
                                 double dt, const Scheme& scheme, BoundaryKind bc,
                                 std::size_t i) {
  const std::size_t n = state.size();
  const double h = state.h;
  const Upwind up = upwind_of(u[i], dt, h);
  const std::size_t j = neighbour(i, up.offset, n, bc);
  const CellStencil cell =
      CellStencil::from_nodes(state.f[i], state.f[j], state.d[i], state.d[j], up.offset * h);
  const InterpResult foot = interpolate(scheme, cell, up.k);

  const double left = u[neighbour(i, -1, n, bc)];
  const double right = u[neighbour(i, +1, n, bc)];
  const double dudx = (right - left) / (2.0 * h);
  return {foot.value, (1.0 - dudx * dt) * foot.deriv};
}

}  // namespace hcr::detail
