//----------------------------------------------------------------------------//
// Single-cell interpolation kernels for semi-Lagrangian advection.
//
// A cell spans the node being updated ("near") and its upwind neighbour
// ("far").  The signed width h is positive when the far node lies at i+1 and
// negative when it lies at i-1, so one set of formulas serves both flow
// directions.  All interpolants are expressed in the Courant fraction
// k in [0, 1] measured from the near node.
//
// Slope and curvature surrogates:
//   S = (f_far - f_near) / h
//   P = (S - d_near) h
//   Q = (d_far - S) h
// The data is convex or concave in the cell iff P*Q > 0.
//----------------------------------------------------------------------------//
#pragma once

#include <string_view>

namespace hcr {

class CellStencil {
 public:
  // Throws std::invalid_argument on non-finite input or zero width.
  static CellStencil from_nodes(double f_near, double f_far, double d_near, double d_far,
                                double h_signed);

  double f_near() const noexcept { return f_near_; }
  double f_far() const noexcept { return f_far_; }
  double d_near() const noexcept { return d_near_; }
  double d_far() const noexcept { return d_far_; }
  double h() const noexcept { return h_; }
  double slope() const noexcept { return s_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  CellStencil() = default;

  double f_near_ = 0.0;
  double f_far_ = 0.0;
  double d_near_ = 0.0;
  double d_far_ = 0.0;
  double h_ = 1.0;
  double s_ = 0.0;
  double p_ = 0.0;
  double q_ = 0.0;
};

inline CellStencil cell_from_nodes(double f_near, double f_far, double d_near, double d_far,
                                   double h_signed) {
  return CellStencil::from_nodes(f_near, f_far, d_near, d_far, h_signed);
}

enum class CellClass { ConvexOrConcave, Other };

// Exact strict test P*Q > 0, no tolerance.
CellClass classify_cell(const CellStencil& cell) noexcept;

// Exactly one of P, Q is zero: the edge of the convex/concave region where the
// rational form degenerates.
bool is_convexity_boundary(const CellStencil& cell) noexcept;

struct MixingState {
  double ratio;    // Q/P
  double clamped;  // max(2, Q/P, P/Q)
  double alpha;    // smallest convexity-preserving rational weight, in [0, 1)
};

// Value and spatial derivative at the characteristic foot.
struct InterpResult {
  double value;
  double deriv;
};

InterpResult eval_cubic(const CellStencil& cell, double k) noexcept;

// Throws PreconditionError unless the cell is convex or concave.
InterpResult eval_rational(const CellStencil& cell, double k);

// Pointwise limit of the rational interpolant as P or Q tends to 0: the
// linear interpolant with slope S for 0 < k < 1, and the nodal values and
// derivatives at k = 0 and k = 1.
// Used on convexity-boundary cells, where the cubic would overshoot.
InterpResult eval_rational_limit(const CellStencil& cell, double k) noexcept;

// Throws PreconditionError unless the cell is convex or concave.
MixingState optimal_alpha(const CellStencil& cell);

// alpha*R + (1-alpha)*C evaluated in compact form.  alpha == 0 reduces to
// eval_cubic exactly and is allowed on any cell; alpha > 0 requires a convex
// or concave cell.
InterpResult eval_hybrid(const CellStencil& cell, double k, double alpha);

// d^2F/dx^2 of the hybrid interpolant.  Requires a convex or concave cell.
double hybrid_second_derivative(const CellStencil& cell, double k, double alpha);

// alpha H^2 + (1-alpha) G^3 [3(H-1)k + 2 - H] with H = Q/P and
// G = (1-H)k + H.  Non-negative iff the hybrid interpolant keeps the sign of
// its curvature at k.  Requires a convex or concave cell.
double feasibility_margin(const CellStencil& cell, double k, double alpha);

class Scheme {
 public:
  enum class Kind { Cip, Rational, ModifiedRational, Hybrid };

  static constexpr Scheme cip() noexcept { return Scheme(Kind::Cip, 1.0); }
  static constexpr Scheme rational() noexcept { return Scheme(Kind::Rational, 1.0); }
  static constexpr Scheme modified_rational() noexcept {
    return Scheme(Kind::ModifiedRational, 1.0);
  }
  // alpha_scale multiplies the optimal weight; the result is clamped to [0, 1].
  static constexpr Scheme hybrid(double alpha_scale = 1.0) noexcept {
    return Scheme(Kind::Hybrid, alpha_scale);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr double alpha_scale() const noexcept { return alpha_scale_; }

  friend constexpr bool operator==(const Scheme&, const Scheme&) = default;

 private:
  constexpr Scheme(Kind kind, double alpha_scale) noexcept
      : kind_(kind), alpha_scale_(alpha_scale) {}

  Kind kind_;
  double alpha_scale_;
};

std::string_view scheme_name(Scheme::Kind kind) noexcept;

// Never throws for finite cells: dispatch only selects the rational form where
// its preconditions hold.
InterpResult interpolate(const Scheme& scheme, const CellStencil& cell, double k);

}  // namespace hcr
