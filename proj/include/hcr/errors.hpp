#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcr {

// Raised when a kernel is called outside its domain (e.g. the rational form on
// data that is neither convex nor concave).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CflError : public std::runtime_error {
 public:
  CflError(std::size_t node, double courant)
      : std::runtime_error("CFL condition violated at node " + std::to_string(node) +
                           " (local Courant number " + std::to_string(courant) + ")"),
        node_(node),
        courant_(courant) {}

  std::size_t node() const noexcept { return node_; }
  double courant() const noexcept { return courant_; }

 private:
  std::size_t node_;
  double courant_;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace hcr
