#include "ptprob/semantic.hpp"

#include <algorithm>
#include <cmath>

#include "ptprob/error.hpp"
#include "ptprob/prob_core.hpp"

namespace ptprob {

double eval_truth(const TruthFunction& t, std::size_t i) {
  if (i >= t.size()) throw Error(ErrorKind::argument, "point index outside the universe");
  return t[i];
}

double eval_truth(const TruthFunction& t, const std::string& point_id) {
  return t[t.universe().index_of(point_id)];
}

double logical_probability(const TruthFunction& t, const Distribution& prior) {
  require_same(t.universe(), prior.universe(), "logical_probability");
  double total = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) total += prior[i] * t[i];
  return std::clamp(total, 0.0, 1.0);
}

Fraction logical_probability(std::span<const Fraction> truth, std::span<const Fraction> prior) {
  // Same weighted sum as a label probability; only the reading differs.
  return label_probability(prior, truth);
}

BayesIResult bayes_theorem_I(double t_a_given_b, double t_a_given_bc, double t_b) {
  for (double v : {t_a_given_b, t_a_given_bc, t_b})
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::domain, "Bayes I inputs must lie in [0,1]");
  const double t_a = t_a_given_b * t_b + t_a_given_bc * (1.0 - t_b);
  if (!(t_a > 0.0)) throw Error(ErrorKind::conditioning, "T(A) = 0: cannot condition on an impossible set");
  return {t_a, std::min(1.0, t_a_given_b * t_b / t_a)};
}

Distribution semantic_bayes_predict(const TruthFunction& t, const Distribution& prior) {
  require_same(t.universe(), prior.universe(), "semantic_bayes_predict");
  double t_theta = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) t_theta += prior[i] * t[i];
  if (!(t_theta > 0.0)) throw Error(ErrorKind::empty_fuzzy_set, "truth function has zero logical probability under the prior");
  std::vector<double> out(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) out[i] = prior[i] * t[i] / t_theta;
  return Distribution(prior.universe(), std::move(out));
}

TruthFromLikelihood truth_from_likelihood(const Distribution& likelihood, const Distribution& prior) {
  require_same(likelihood.universe(), prior.universe(), "truth_from_likelihood");
  const std::size_t m = prior.size();
  std::vector<double> ratio(m, 0.0);
  double peak = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (prior[i] > 0.0) {
      ratio[i] = likelihood[i] / prior[i];
    } else if (likelihood[i] > 0.0) {
      throw Error(ErrorKind::support, "likelihood has mass on zero-prior point '" + prior.universe()[i].id + "'");
    }
    peak = std::max(peak, ratio[i]);
  }
  if (!(peak > 0.0) || !std::isfinite(peak)) throw Error(ErrorKind::support, "likelihood/prior ratio has no finite positive maximum");
  for (double& r : ratio) r = std::min(1.0, r / peak);
  return {TruthFunction::tabulated(prior.universe(), std::move(ratio)), 1.0 / peak};
}

double plausibility(const Distribution& label_prior, const std::set<std::string>& compatible,
                    const std::string& target) {
  if (!compatible.contains(target)) throw Error(ErrorKind::argument, "target label '" + target + "' is not in the compatible set");
  double total = 0.0;
  for (const auto& label : compatible) total += label_prior[label_prior.universe().index_of(label)];
  return std::min(total, 1.0);
}

}  // namespace ptprob
