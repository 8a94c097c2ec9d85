#pragma once

// Logical probability and the Bayes theorems that involve it.
//
// Bayes' Theorem I conditions one set on another (both probabilities are
// logical). Bayes' Theorem III converts between a truth function T(θ|x) and a
// likelihood P(x|θ):
//
//   P(x|θ) = P(x) T(θ|x) / T(θ),        T(θ) = Σ_i P(x_i) T(θ|x_i)
//   T(θ|x) = [P(x|θ)/P(x)] / max_x [P(x|θ)/P(x)],   T(θ) = 1 / max(...)
//
// The first is normalized over x (sums to 1), the second over its maximum.

#include <cstddef>
#include <set>
#include <span>
#include <string>

#include "ptprob/distribution.hpp"
#include "ptprob/fraction.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob {

// Truth value at one point. For a tabulated truth it is the stored value.
double eval_truth(const TruthFunction& t, std::size_t i);
double eval_truth(const TruthFunction& t, const std::string& point_id);

// T(θ) = Σ_i P(x_i) T(θ|x_i).
double logical_probability(const TruthFunction& t, const Distribution& prior);
// Exact version for count-derived priors; the prior must sum to exactly 1.
Fraction logical_probability(std::span<const Fraction> truth, std::span<const Fraction> prior);

struct BayesIResult {
  double t_a;          // T(A) = T(A|B)T(B) + T(A|B^c)(1 - T(B))
  double t_b_given_a;  // T(B|A) = T(A|B)T(B)/T(A)
};

BayesIResult bayes_theorem_I(double t_a_given_b, double t_a_given_bc, double t_b);

// Semantic Bayes prediction P(x|θ).
Distribution semantic_bayes_predict(const TruthFunction& t, const Distribution& prior);

struct TruthFromLikelihood {
  TruthFunction truth;       // tabulated, max 1
  double logical_prob;       // T(θ) = 1 / max_x [P(x|θ)/P(x)]
};

// Longitudinal normalization of a likelihood against a prior. Points where
// both prior and likelihood vanish get truth 0 and are excluded from the max.
TruthFromLikelihood truth_from_likelihood(const Distribution& likelihood, const Distribution& prior);

// Σ of the label prior over the labels compatible with `target` (which must
// itself be in the compatible set).
double plausibility(const Distribution& label_prior, const std::set<std::string>& compatible,
                    const std::string& target);

}  // namespace ptprob
