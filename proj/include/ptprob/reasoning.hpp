#pragma once

// Forms of Bayesian reasoning, from classical Bayes prediction to fuzzy
// syllogisms driven by degrees of confirmation.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "ptprob/channel.hpp"
#include "ptprob/distribution.hpp"
#include "ptprob/fraction.hpp"
#include "ptprob/prob_core.hpp"
#include "ptprob/semantic.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob {

// {"h1", "h0"}.
Universe hypothesis_universe();

// P(h|θe1) from a channel degree b1* in [-1,1] and a prior over a universe
// containing "h1" and "h0":
//   b1* >= 0:  P(h1|θe1) = P(h1) / [P(h1) + (1 - b1*) P(h0)]
//   b1* <  0:  P(h0|θe1) = P(h0) / [P(h0) + (1 + b1*) P(h1)]   (consequence symmetry)
Distribution syllogism_channel(double b1_star, const Distribution& h_prior);

// P(h|θe1) over hypothesis_universe() from a prediction degree c1* in [-1,1]:
//   c1* >= 0:  (1/(2 - c1*), (1 - c1*)/(2 - c1*))
//   c1* <  0:  ((1 + c1*)/(2 + c1*), 1/(2 + c1*))
Distribution syllogism_prediction(double c1_star);

namespace row {

struct BayesPrediction {  // P(x|y_j) from P(x) and P(y_j|x)
  Distribution prior;
  std::vector<double> tpf_row;
};
struct SetConditioning {  // T(B|A) from T(A|B), T(A|B^c), T(B)
  double t_a_given_b;
  double t_a_given_bc;
  double t_b;
};
struct TruthEvaluation {  // T(θ|x_i) and T(θ)
  TruthFunction truth;
  Distribution prior;
  std::size_t point;
};
struct SemanticPrediction {  // P(x|θ)
  TruthFunction truth;
  Distribution prior;
};
struct Induction {  // T(θ|x) from P(x|θ)
  Distribution likelihood;
  Distribution prior;
};
struct LogicalInference {  // matched semantic channel from P(y|x)
  ShannonChannel channel;
};
struct ChannelSyllogism {
  double b1_star;
  Distribution h_prior;
};
struct PredictionSyllogism {
  double c1_star;
};

}  // namespace row

using ReasoningRow = std::variant<row::BayesPrediction, row::SetConditioning, row::TruthEvaluation,
                                  row::SemanticPrediction, row::Induction, row::LogicalInference,
                                  row::ChannelSyllogism, row::PredictionSyllogism>;

struct TruthAndLogical {
  double truth;
  double logical_prob;
};

using ReasoningResult =
    std::variant<BayesPosterior, BayesIResult, TruthAndLogical, Distribution, TruthFromLikelihood, SemanticChannel>;

ReasoningResult reason(const ReasoningRow& r);
std::vector<ReasoningResult> reasoning_table(std::span<const ReasoningRow> rows);

template <typename T>
struct ImplicationBound {
  T q_given_p;    // P(pq)/P(p)
  T implication;  // 1 - P(p) + P(pq)
  bool holds;     // q_given_p <= implication
};

// Needs 0 < P(p) <= 1 and 0 <= P(pq) <= P(p); inconsistent_input otherwise.
ImplicationBound<double> implication_bound(double p_p, double p_pq);
ImplicationBound<Fraction> implication_bound(const Fraction& p_p, const Fraction& p_pq);

}  // namespace ptprob
