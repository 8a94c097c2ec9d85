#include "ptprob/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ptprob/error.hpp"

namespace ptprob {

Distribution::Distribution(Universe universe, std::vector<double> mass, bool renormalize)
    : universe_(std::move(universe)), mass_(std::move(mass)) {
  if (mass_.size() != universe_.size())
    throw Error(ErrorKind::dimension, "distribution has " + std::to_string(mass_.size()) +
                                          " masses for a universe of " + std::to_string(universe_.size()));
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (!std::isfinite(mass_[i]) || mass_[i] < 0.0)
      throw Error(ErrorKind::domain, "negative or non-finite mass at '" + universe_[i].id + "'");
  }
  const double total = std::accumulate(mass_.begin(), mass_.end(), 0.0);
  if (renormalize) {
    if (!(total > 0.0)) throw Error(ErrorKind::normalization, "cannot renormalize a zero measure");
    for (double& m : mass_) m /= total;
  } else if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::normalization, "mass sums to " + std::to_string(total) + ", not 1");
  }
}

Distribution Distribution::uniform(Universe universe) {
  const std::size_t n = universe.size();
  return Distribution(std::move(universe), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(Universe universe, std::size_t index) {
  std::vector<double> mass(universe.size(), 0.0);
  if (index >= mass.size()) throw Error(ErrorKind::argument, "point-mass index out of range");
  mass[index] = 1.0;
  return Distribution(std::move(universe), std::move(mass));
}

}  // namespace ptprob
