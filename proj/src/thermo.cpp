#include <algorithm>
#include <cmath>
#include <string>

#include "ptprob/error.hpp"
#include "ptprob/prob_core.hpp"
#include "ptprob/rate_thermo.hpp"

namespace ptprob {

namespace {

void check_states(std::size_t n, std::span<const double> energies, std::span<const double> multiplicities) {
  if (energies.size() != n || multiplicities.size() != n)
    throw Error(ErrorKind::dimension, "energies and multiplicities must match the state count");
  double g = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(energies[i])) throw Error(ErrorKind::parameter, "state energies must be finite");
    if (!(multiplicities[i] >= 0.0) || !std::isfinite(multiplicities[i]))
      throw Error(ErrorKind::parameter, "multiplicities must be finite and nonnegative");
    g += multiplicities[i];
  }
  if (!(g > 0.0)) throw Error(ErrorKind::parameter, "total multiplicity must be positive");
}

double total(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

Universe numbered_states(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return Universe::from_ids(ids);
}

}  // namespace

Distribution boltzmann(const Universe& states, std::span<const double> energies, std::span<const double> multiplicities,
                       double kT) {
  if (!(kT > 0.0) || !std::isfinite(kT)) throw Error(ErrorKind::parameter, "kT must be positive");
  check_states(states.size(), energies, multiplicities);
  const double e_min = *std::min_element(energies.begin(), energies.end());
  const double g = total(multiplicities);
  std::vector<double> w(states.size());
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = multiplicities[i] / g * std::exp(-(energies[i] - e_min) / kT);
    z += w[i];
  }
  for (double& v : w) v /= z;
  return Distribution(states, std::move(w), true);
}

Distribution boltzmann(std::span<const double> energies, std::span<const double> multiplicities, double kT) {
  if (energies.empty()) throw Error(ErrorKind::argument, "at least one state is required");
  return boltzmann(numbered_states(energies.size()), energies, multiplicities, kT);
}

void validate(const ThermoSystem& sys) {
  if (!(sys.k > 0.0) || !std::isfinite(sys.k)) throw Error(ErrorKind::parameter, "Boltzmann constant must be positive");
  if (sys.areas.empty()) throw Error(ErrorKind::parameter, "thermo system needs at least one area");
  const std::size_t n = sys.areas.front().energies.size();
  if (n == 0) throw Error(ErrorKind::parameter, "areas need at least one state");
  const double g = total(sys.areas.front().multiplicities);
  for (const auto& a : sys.areas) {
    if (!(a.temperature > 0.0) || !std::isfinite(a.temperature))
      throw Error(ErrorKind::parameter, "area temperature must be positive");
    if (!(a.particles > 0.0) || !std::isfinite(a.particles))
      throw Error(ErrorKind::parameter, "area particle count must be positive");
    check_states(n, a.energies, a.multiplicities);
    if (std::abs(total(a.multiplicities) - g) > 1e-12 * g)
      throw Error(ErrorKind::parameter, "every area must have the same total multiplicity G");
  }
}

EntropyInfoRelation entropy_info_relation(const ThermoSystem& sys) {
  validate(sys);
  const std::size_t n = sys.areas.front().energies.size();
  const Universe states = numbered_states(n);
  double particles = 0.0;
  for (const auto& a : sys.areas) particles += a.particles;
  const double g = total(sys.areas.front().multiplicities);

  // Information side: each area's Boltzmann distribution against its G_i/G prior.
  double r_theta = 0.0;
  for (const auto& a : sys.areas) {
    const Distribution prior(states, std::vector<double>(a.multiplicities.begin(), a.multiplicities.end()), true);
    const Distribution post = boltzmann(states, a.energies, a.multiplicities, sys.k * a.temperature);
    r_theta += a.particles / particles * kl_divergence(post, prior, LogBase::nats);
  }

  // Thermodynamic side: S_j = E_j/T_j + k N_j ln Z_j with Z_j = Σ_i G_i exp(-e_i/kT_j).
  double entropy = 0.0;
  for (const auto& a : sys.areas) {
    const double kt = sys.k * a.temperature;
    const double e_min = *std::min_element(a.energies.begin(), a.energies.end());
    double z_shift = 0.0;
    double e_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = a.multiplicities[i] * std::exp(-(a.energies[i] - e_min) / kt);
      z_shift += w;
      e_sum += w * a.energies[i];
    }
    const double ln_z = std::log(z_shift) - e_min / kt;
    const double energy = a.particles * e_sum / z_shift;
    entropy += energy / a.temperature + sys.k * a.particles * ln_z;
  }
  const double rhs = std::log(g) - entropy / (sys.k * particles);
  return {r_theta, from_nats(r_theta, LogBase::bits), entropy, rhs, std::abs(r_theta - rhs)};
}

}  // namespace ptprob
