#pragma once

// Statistical probability over finite universes: Bayes' theorem in its
// frequentist form, Shannon mutual information and KL divergence.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "ptprob/channel.hpp"
#include "ptprob/distribution.hpp"
#include "ptprob/fraction.hpp"

namespace ptprob {

enum class LogBase { bits, nats };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Converts a natural-log quantity into the requested unit.
inline double from_nats(double nats, LogBase base) {
  return base == LogBase::bits ? nats / std::numbers::ln2 : nats;
}

const char* unit_name(LogBase base);

struct BayesPosterior {
  double label_prob;      // P(y_j) = Σ_i P(y_j|x_i) P(x_i)
  Distribution posterior; // P(x|y_j)
};

// P(x|y_j) from a prior and one transition probability row.
BayesPosterior bayes_posterior(const Distribution& prior, std::span<const double> tpf_row);

struct BayesInverse {
  ShannonChannel channel;  // undefined columns where the mixture is 0
  Distribution mixture;    // P(x) = Σ_j P(x|y_j) P(y_j)
};

// Rebuilds P(y|x) from per-label posteriors and the label prior. Labels are
// the ids of the label prior's universe.
BayesInverse bayes_inverse(std::span<const Distribution> posteriors, const Distribution& label_prior);

struct ChannelPredictions {
  Distribution label_prior;                      // P(y)
  std::vector<std::optional<Distribution>> posteriors;  // nullopt where P(y_j) = 0
};

// Bayes predictions P(x|y_j) for every label of a channel.
ChannelPredictions predict_all(const Distribution& prior, const ShannonChannel& channel);

// I(X;Y). Zero-joint-mass terms contribute 0.
double shannon_mutual_info(const Distribution& prior, const ShannonChannel& channel,
                           LogBase base = LogBase::bits);

// D(posterior || prior); +inf when the posterior is not absolutely continuous.
double kl_divergence(const Distribution& posterior, const Distribution& prior, LogBase base = LogBase::bits);

double entropy(const Distribution& d, LogBase base = LogBase::bits);

// Channel with labels j and k merged into one row named "<j>+<k>" at index min(j,k).
ShannonChannel merge_labels(const ShannonChannel& channel, std::size_t j, std::size_t k);

// Label universe built from a channel's label names.
Universe label_universe(const ShannonChannel& channel);

// Exact P(y_j) = Σ_i P(x_i) P(y_j|x_i) for count-derived inputs. The prior
// must sum to exactly 1.
Fraction label_probability(std::span<const Fraction> prior, std::span<const Fraction> tpf_row);

}  // namespace ptprob
