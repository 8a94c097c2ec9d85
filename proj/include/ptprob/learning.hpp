#pragma once

// Learning truth functions from samples.
//
// Matching: with a Shannon channel P(y|x) known, the truth function that makes
// semantic predictions equal Bayes predictions is T*(θ_j|x) = P(y_j|x)/max P(y_j|x).
// Without enough data for a smooth channel, a parametric truth is fitted by
// maximizing the generalized KL information Σ_i P(x_i|y_j) log[T(θ|x_i)/T(θ)].

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ptprob/channel.hpp"
#include "ptprob/distribution.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob {

struct Example {
  std::string x;
  std::string label;
};

struct LabeledSample {
  std::vector<Example> examples;
};

// Universe of the distinct x ids in a sample. When every id parses as a
// number the points carry that scalar coordinate and are sorted by it;
// otherwise they keep first-appearance order.
Universe sample_universe(const LabeledSample& sample);

struct EmpiricalModel {
  Distribution prior;                    // P(x)
  Distribution label_prior;              // P(y)
  std::vector<Distribution> posteriors;  // P(x|y_j)
  ShannonChannel channel;                // P(y|x), undefined where x never occurs
};

// Relative frequencies, no smoothing. Labels default to first-appearance
// order; when given explicitly every label needs at least one example.
EmpiricalModel empirical_distributions(const LabeledSample& sample, const Universe& universe,
                                       const std::optional<std::vector<std::string>>& labels = std::nullopt);
EmpiricalModel empirical_distributions(const LabeledSample& sample);

// T*(θ_j|x) = P(y_j|x) / max_x P(y_j|x). Undefined channel columns map to 0.
SemanticChannel match_truth_functions(const ShannonChannel& channel);

// T*(θ|x) = [P(x|y)/P(x)] / max[P(x|y)/P(x)].
TruthFunction truth_from_sampling(const Distribution& posterior, const Distribution& prior);

enum class Family { gaussian, logistic };

const char* family_name(Family f);
// {"center","sigma"} or {"slope","threshold"}.
std::array<const char*, 2> param_names(Family f);

struct ParamBounds {
  double lo;
  double hi;
};

struct FitOptions {
  Family family = Family::logistic;
  std::array<ParamBounds, 2> bounds{};
  std::size_t grid = 32;         // per-axis coarse grid size
  bool gradient_ascent = false;  // refine with projected gradient ascent instead of golden section
  std::size_t max_cycles = 4000;
};

struct FitResult {
  Family family = Family::logistic;
  std::array<double, 2> params{};
  double objective_bits = 0.0;
  std::vector<double> trace;  // nondecreasing objective values
  std::size_t iterations = 0;
  bool prior_assumed_uniform = false;
  // Sampling supported on one point: the optimum runs to a bound.
  bool unbounded_precision = false;
  std::array<bool, 2> at_bound{};

  TruthFunction truth(const Universe& universe) const;
};

// Σ_i sampling_i log2[T(θ|x_i)/T(θ)] for the given family parameters, with
// T(θ) recomputed from the prior. Evaluated in the log domain.
double fit_objective(Family family, std::array<double, 2> params, const Distribution& sampling,
                     const Distribution& prior);

// Analytic gradient of fit_objective (bits per unit parameter).
std::array<double, 2> fit_objective_gradient(Family family, std::array<double, 2> params,
                                             const Distribution& sampling, const Distribution& prior);

// Coarse grid over the bounds, then coordinate-wise golden-section refinement
// (or gradient ascent). With no prior the uniform prior is assumed and the
// result says so.
FitResult fit_parametric_truth(const Distribution& sampling, const std::optional<Distribution>& prior,
                               const FitOptions& options);

// argmax_j log[T(θ_j|x)/T(θ_j)]; ties go to the lowest label index.
std::size_t classify(const SemanticChannel& sc, const Distribution& prior, std::size_t i);

// Fraction of the subsets that contain x (falling-shadow membership).
double random_set_membership(std::span<const std::set<std::string>> sets, const std::string& x);

}  // namespace ptprob
