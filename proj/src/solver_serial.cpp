#include <cmath>

#include "hcr/errors.hpp"
#include "hcr/solver.hpp"
#include "node_update.hpp"

namespace hcr::serial {

GridField step(const GridField& state, const VelocityField& vel, const StepParams& params,
               const Scheme& scheme, BoundaryKind bc) {
  validate(state, vel, params);
  const std::size_t n = state.size();
  GridField out{std::vector<double>(n), std::vector<double>(n), state.h};
  for (std::size_t i = 0; i < n; ++i) {
    const InterpResult r = detail::advance_node(state, vel.u, params.dt, scheme, bc, i);
    if (!std::isfinite(r.value) || !std::isfinite(r.deriv)) {
      throw DivergenceError(0, "non-finite state at node " + std::to_string(i));
    }
    out.f[i] = r.value;
    out.d[i] = r.deriv;
  }
  return out;
}

}  // namespace hcr::serial
