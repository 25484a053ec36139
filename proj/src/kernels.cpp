#include "hcr/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcr/errors.hpp"

namespace hcr {

CellStencil CellStencil::from_nodes(double f_near, double f_far, double d_near, double d_far,
                                    double h_signed) {
  if (!std::isfinite(f_near) || !std::isfinite(f_far) || !std::isfinite(d_near) ||
      !std::isfinite(d_far) || !std::isfinite(h_signed)) {
    throw std::invalid_argument("cell_from_nodes: non-finite input");
  }
  if (h_signed == 0.0) {
    throw std::invalid_argument("cell_from_nodes: zero cell width");
  }
  CellStencil c;
  c.f_near_ = f_near;
  c.f_far_ = f_far;
  c.d_near_ = d_near;
  c.d_far_ = d_far;
  c.h_ = h_signed;
  c.s_ = (f_far - f_near) / h_signed;
  c.p_ = (c.s_ - d_near) * h_signed;
  c.q_ = (d_far - c.s_) * h_signed;
  return c;
}

namespace {

// a * b > 0 without forming the product, which underflows for tiny data.
bool same_strict_sign(double a, double b) noexcept {
  return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0);
}

bool opposite_strict_sign(double a, double b) noexcept {
  return (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0);
}

}  // namespace

CellClass classify_cell(const CellStencil& cell) noexcept {
  return same_strict_sign(cell.p(), cell.q()) ? CellClass::ConvexOrConcave : CellClass::Other;
}

bool is_convexity_boundary(const CellStencil& cell) noexcept {
  return (cell.p() == 0.0) != (cell.q() == 0.0);
}

namespace {

void require_convex(const CellStencil& cell, const char* who) {
  if (classify_cell(cell) != CellClass::ConvexOrConcave) {
    throw PreconditionError(std::string(who) +
                            ": cell data is neither convex nor concave (P*Q <= 0)");
  }
}

}  // namespace

InterpResult eval_cubic(const CellStencil& cell, double k) noexcept {
  const double p = cell.p();
  const double q = cell.q();
  const double h = cell.h();
  const double c2 = 2.0 * p - q;
  const double c3 = q - p;
  const double value = cell.f_near() + cell.d_near() * h * k + c2 * k * k + c3 * k * k * k;
  const double deriv = cell.d_near() + (2.0 * c2 * k + 3.0 * c3 * k * k) / h;
  return {value, deriv};
}

InterpResult eval_rational(const CellStencil& cell, double k) {
  require_convex(cell, "eval_rational");
  const double p = cell.p();
  const double q = cell.q();
  const double h = cell.h();
  // Same sign as P and bounded away from zero on [0, 1] for convex data.
  const double den = q + (p - q) * k;
  const double r = p / den;
  const double value = cell.f_near() + cell.d_near() * h * k + p * r * k * k;
  const double deriv = cell.d_near() + r * r * k * (q + den) / h;
  return {value, deriv};
}

InterpResult eval_rational_limit(const CellStencil& cell, double k) noexcept {
  if (k == 0.0) return {cell.f_near(), cell.d_near()};
  if (k == 1.0) return {cell.f_far(), cell.d_far()};
  return {cell.f_near() + (cell.f_far() - cell.f_near()) * k, cell.slope()};
}

MixingState optimal_alpha(const CellStencil& cell) {
  require_convex(cell, "optimal_alpha");
  const double ratio = cell.q() / cell.p();
  const double clamped = std::max({2.0, ratio, 1.0 / ratio});
  const double t = clamped * (clamped - 2.0);
  const double alpha = std::isfinite(t) ? t / (t + 1.0) : 1.0;
  return {ratio, clamped, alpha};
}

InterpResult eval_hybrid(const CellStencil& cell, double k, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw PreconditionError("eval_hybrid: alpha outside [0, 1]");
  }
  if (alpha == 0.0) {
    return eval_cubic(cell, k);
  }
  require_convex(cell, "eval_hybrid");
  const double p = cell.p();
  const double q = cell.q();
  const double h = cell.h();
  const double beta = 1.0 - alpha;
  const double den = q + (p - q) * k;
  const double r = p / den;
  const double g1 = alpha * p * r;
  const double g2 = beta * (2.0 * p - den);
  const double value = cell.f_near() + cell.d_near() * h * k + (g1 + g2) * k * k;
  const double deriv =
      cell.d_near() + (alpha * r * r * (q + den) + 2.0 * g2 + beta * (q - den)) * k / h;
  return {value, deriv};
}

double hybrid_second_derivative(const CellStencil& cell, double k, double alpha) {
  require_convex(cell, "hybrid_second_derivative");
  const double p = cell.p();
  const double q = cell.q();
  const double h2 = cell.h() * cell.h();
  const double den = (p - q) * k + q;
  const double r = p / den;
  const double rational = 2.0 * r * r * (q / den) * q / h2;
  const double cubic = 2.0 / h2 * (3.0 * (q - p) * k + 2.0 * p - q);
  return alpha * rational + (1.0 - alpha) * cubic;
}

double feasibility_margin(const CellStencil& cell, double k, double alpha) {
  require_convex(cell, "feasibility_margin");
  const double ratio = cell.q() / cell.p();
  const double g = (1.0 - ratio) * k + ratio;
  const double shape = g * g * g * (3.0 * (ratio - 1.0) * k + 2.0 - ratio);
  return alpha * ratio * ratio + (1.0 - alpha) * shape;
}

std::string_view scheme_name(Scheme::Kind kind) noexcept {
  switch (kind) {
    case Scheme::Kind::Cip:
      return "cip";
    case Scheme::Kind::Rational:
      return "rational";
    case Scheme::Kind::ModifiedRational:
      return "modified-rational";
    case Scheme::Kind::Hybrid:
      return "hybrid";
  }
  return "unknown";
}

InterpResult interpolate(const Scheme& scheme, const CellStencil& cell, double k) {
  const bool convex = classify_cell(cell) == CellClass::ConvexOrConcave;
  const bool boundary = is_convexity_boundary(cell);
  switch (scheme.kind()) {
    case Scheme::Kind::Cip:
      break;
    case Scheme::Kind::Rational:
      if (convex) return eval_rational(cell, k);
      if (boundary) return eval_rational_limit(cell, k);
      break;
    case Scheme::Kind::ModifiedRational:
      // The derivative sign switch alone can place a pole inside the cell, so
      // the convexity guard is kept as well.
      if (opposite_strict_sign(cell.d_near(), cell.d_far())) {
        if (convex) return eval_rational(cell, k);
        if (boundary) return eval_rational_limit(cell, k);
      }
      break;
    case Scheme::Kind::Hybrid:
      if (convex) {
        const double alpha =
            std::clamp(scheme.alpha_scale() * optimal_alpha(cell).alpha, 0.0, 1.0);
        return eval_hybrid(cell, k, alpha);
      }
      // The optimal weight tends to 1 as P or Q tends to 0.
      if (boundary) {
        const double alpha = std::clamp(scheme.alpha_scale(), 0.0, 1.0);
        if (alpha == 1.0) return eval_rational_limit(cell, k);
        const InterpResult lim = eval_rational_limit(cell, k);
        const InterpResult cub = eval_cubic(cell, k);
        return {alpha * lim.value + (1.0 - alpha) * cub.value,
                alpha * lim.deriv + (1.0 - alpha) * cub.deriv};
      }
      break;
  }
  return eval_cubic(cell, k);
}

}  // namespace hcr
