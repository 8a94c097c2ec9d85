#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ptprob/universe.hpp"

namespace ptprob {

// Tolerance on |Σ mass - 1| accepted at construction.
inline constexpr double kNormTolerance = 1e-9;

// Probability mass function over a finite universe.
class Distribution {
 public:
  // Validates nonnegativity and unit sum (within kNormTolerance). Pass
  // renormalize = true to divide by the sum instead of rejecting it.
  Distribution(Universe universe, std::vector<double> mass, bool renormalize = false);

  static Distribution uniform(Universe universe);
  static Distribution point_mass(Universe universe, std::size_t index);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return mass_.size(); }
  double operator[](std::size_t i) const { return mass_[i]; }
  std::span<const double> mass() const noexcept { return mass_; }

 private:
  Universe universe_;
  std::vector<double> mass_;
};

}  // namespace ptprob
