#pragma once

// Semantic information measures.
//
//   I(x_i; θ_j) = log [T(θ_j|x_i) / T(θ_j)]                  point
//   I(X; θ_j)   = Σ_i P(x_i|y_j) log [T(θ_j|x_i) / T(θ_j)]   average (generalized KL)
//   I(X; Θ)     = Σ_j P(y_j) I(X; θ_j)                        semantic mutual information
//
// A zero truth value where the sampling distribution has mass makes the value
// -inf (falsification). Verisimilitude of a multi-attribute prediction is the
// point measure evaluated with a multivariate Gaussian truth.

#include <cstddef>
#include <optional>
#include <vector>

#include "ptprob/channel.hpp"
#include "ptprob/distribution.hpp"
#include "ptprob/prob_core.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob {

double semantic_info_point(const TruthFunction& t, const Distribution& prior, std::size_t i,
                           LogBase base = LogBase::bits);

struct AverageInfo {
  double value;                   // -inf when falsified
  std::size_t falsifying_points;  // sampling mass on T(θ|x) = 0
};

AverageInfo avg_semantic_info(const TruthFunction& t, const Distribution& sampling, const Distribution& prior,
                              LogBase base = LogBase::bits);

struct SemanticInfoReport {
  LogBase units = LogBase::bits;
  std::vector<double> logical_probs;                // T(θ_j)
  std::vector<std::vector<double>> point_info;      // [j][i]
  std::vector<std::optional<double>> avg_info;      // nullopt where P(y_j) = 0
  std::vector<std::size_t> falsifying_points;       // per label
  double mutual_info = 0.0;                         // I(X;Θ)
  double shannon_mutual_info = 0.0;                 // I(X;Y) for comparison
};

SemanticInfoReport semantic_mutual_info(const SemanticChannel& sc, const Distribution& prior,
                                        const ShannonChannel& channel, LogBase base = LogBase::bits);

// Gaussian-truth decomposition, in nats:
//   I(X;Θ) = -Σ_j P(y_j) ln T(θ_j) - Σ_ij P(x_i,y_j) (x_i - c_j)^2 / (2 σ_j^2)
struct GaussianDecomposition {
  double mutual_info;         // I(X;Θ) computed directly
  double entropy_term;        // -Σ_j P(y_j) ln T(θ_j)
  double squared_error_term;  // Σ_ij P(x_i,y_j) |x_i - c_j|^2 / (2 σ_j^2), nonnegative
  double identity_residual;   // |mutual_info - (entropy_term - squared_error_term)|
};

GaussianDecomposition gaussian_decomposition(const SemanticChannel& sc, const Distribution& prior,
                                             const ShannonChannel& channel);

// I_c = Σ_i ideal_i log(actual_i / prior_i). May be negative or ±inf.
double effective_control_amount(const Distribution& ideal, const Distribution& actual, const Distribution& prior,
                                LogBase base = LogBase::bits);

}  // namespace ptprob
