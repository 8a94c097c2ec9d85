#pragma once

// Rate-distortion by the parametric (s, λ) solution, its truth-function
// reading R(Θ), minimum information under distribution constraint functions,
// and the Boltzmann distribution as a semantic Bayes prediction.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ptprob/channel.hpp"
#include "ptprob/distribution.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob {

// d(x_i, y_j) with rows indexed by instance and columns by reproduction label.
class DistortionMatrix {
 public:
  DistortionMatrix(std::vector<std::string> labels, std::vector<std::vector<double>> values);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t rows() const noexcept { return values_.size(); }
  std::size_t cols() const noexcept { return labels_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return values_[i][j]; }
  const std::vector<std::vector<double>>& values() const noexcept { return values_; }

  // d_ij = 0 when i == j, 1 otherwise; labels are the universe ids.
  static DistortionMatrix hamming(const Universe& u);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> values_;
};

inline constexpr double kRdTolerance = 1e-10;
inline constexpr std::size_t kRdMaxSweeps = 100000;
inline constexpr double kRdPruneBelow = 1e-12;

struct RdPoint {
  double s = 0.0;
  double D = 0.0;             // average distortion
  double R = 0.0;             // bits
  Distribution reproduction_prior;
  ShannonChannel channel;     // P(y_j|x_i) = P(y_j) exp(s d_ij) / λ_i
  std::vector<std::string> pruned_labels;
  std::size_t sweeps = 0;
};

// Alternating update on P(y) from a uniform start until the largest relative
// change drops below kRdTolerance. Labels whose mass falls below kRdPruneBelow
// are dropped to zero and listed.
RdPoint rd_point(const Distribution& prior, const DistortionMatrix& d, double s);

// s_grid must be nonpositive and nonincreasing.
std::vector<RdPoint> rd_curve(const Distribution& prior, const DistortionMatrix& d, std::span<const double> s_grid);

// Semantic mutual information with T(θ_xi|y_j) = exp(s d_ij) over the
// reproduction universe and T(θ_xi) = λ_i. Equals rd.R.
double r_theta_from_rd(const RdPoint& rd, const Distribution& prior, const DistortionMatrix& d);

struct DcfMinimum {
  double min_info = 0.0;                 // Σ_j P(y_j) I(X; y_j), bits
  std::vector<double> per_label_info;    // KL(P(x|θ_j) || P(x)), bits
  std::vector<Distribution> posteriors;  // P(x|θ_j)
  ShannonChannel channel;                // channel implied by the posteriors and label prior
};

// label_prior is indexed like the DCF labels.
DcfMinimum dcf_minimum_info(const SemanticChannel& dcfs, const Distribution& prior, const Distribution& label_prior);

// P(x_i|T) = (G_i/G) exp(-e_i/kT) / Z'.
Distribution boltzmann(const Universe& states, std::span<const double> energies, std::span<const double> multiplicities,
                       double kT);
// States named "1".."n".
Distribution boltzmann(std::span<const double> energies, std::span<const double> multiplicities, double kT);

struct ThermoArea {
  double temperature = 1.0;  // in energy units per k
  double particles = 1.0;
  std::vector<double> energies;
  std::vector<double> multiplicities;
};

struct ThermoSystem {
  double k = 1.0;
  std::vector<ThermoArea> areas;
};

// Throws a parameter error unless temperatures, particle counts and k are
// positive, sizes agree and every area has the same total multiplicity G.
void validate(const ThermoSystem& sys);

struct EntropyInfoRelation {
  double r_theta_nats;         // Σ_j (N_j/N) KL(Boltzmann_j || G_i/G)
  double r_theta_bits;
  double entropy;              // S = Σ_j (E_j/T_j + k N_j ln Z_j)
  double ln_g_minus_s_over_kn; // ln G - S/(kN)
  double residual;             // |r_theta_nats - ln_g_minus_s_over_kn|
};

EntropyInfoRelation entropy_info_relation(const ThermoSystem& sys);

}  // namespace ptprob
