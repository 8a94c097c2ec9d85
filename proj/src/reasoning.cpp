#include "ptprob/reasoning.hpp"

#include <limits>

#include "ptprob/error.hpp"
#include "ptprob/learning.hpp"

namespace ptprob {

namespace {

void check_degree(double v, const char* what) {
  if (!(v >= -1.0 && v <= 1.0)) throw Error(ErrorKind::domain, std::string(what) + " must lie in [-1,1]");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Universe hypothesis_universe() { return Universe::from_ids({"h1", "h0"}); }

Distribution syllogism_channel(double b1_star, const Distribution& h_prior) {
  check_degree(b1_star, "b1*");
  const Universe& u = h_prior.universe();
  if (u.size() != 2) throw Error(ErrorKind::dimension, "hypothesis prior must cover exactly h1 and h0");
  const std::size_t i1 = u.index_of("h1");
  const std::size_t i0 = u.index_of("h0");
  const double p1 = h_prior[i1];
  const double p0 = h_prior[i0];
  std::vector<double> out(2);
  if (b1_star >= 0.0) {
    const double den = p1 + (1.0 - b1_star) * p0;
    if (!(den > 0.0)) throw Error(ErrorKind::conditioning, "P(h1) = 0 with b1* = 1: the consequence is undefined");
    out[i1] = p1 / den;
    out[i0] = 1.0 - out[i1];
  } else {
    const double den = p0 + (1.0 + b1_star) * p1;
    if (!(den > 0.0)) throw Error(ErrorKind::conditioning, "P(h0) = 0 with b1* = -1: the consequence is undefined");
    out[i0] = p0 / den;
    out[i1] = 1.0 - out[i0];
  }
  return Distribution(u, std::move(out));
}

Distribution syllogism_prediction(double c1_star) {
  check_degree(c1_star, "c1*");
  if (c1_star >= 0.0) return Distribution(hypothesis_universe(), {1.0 / (2.0 - c1_star), (1.0 - c1_star) / (2.0 - c1_star)});
  return Distribution(hypothesis_universe(), {(1.0 + c1_star) / (2.0 + c1_star), 1.0 / (2.0 + c1_star)});
}

ReasoningResult reason(const ReasoningRow& r) {
  return std::visit(
      overloaded{
          [](const row::BayesPrediction& x) -> ReasoningResult { return bayes_posterior(x.prior, x.tpf_row); },
          [](const row::SetConditioning& x) -> ReasoningResult {
            return bayes_theorem_I(x.t_a_given_b, x.t_a_given_bc, x.t_b);
          },
          [](const row::TruthEvaluation& x) -> ReasoningResult {
            return TruthAndLogical{eval_truth(x.truth, x.point), logical_probability(x.truth, x.prior)};
          },
          [](const row::SemanticPrediction& x) -> ReasoningResult { return semantic_bayes_predict(x.truth, x.prior); },
          [](const row::Induction& x) -> ReasoningResult { return truth_from_likelihood(x.likelihood, x.prior); },
          [](const row::LogicalInference& x) -> ReasoningResult { return match_truth_functions(x.channel); },
          [](const row::ChannelSyllogism& x) -> ReasoningResult { return syllogism_channel(x.b1_star, x.h_prior); },
          [](const row::PredictionSyllogism& x) -> ReasoningResult { return syllogism_prediction(x.c1_star); },
      },
      r);
}

std::vector<ReasoningResult> reasoning_table(std::span<const ReasoningRow> rows) {
  std::vector<ReasoningResult> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(reason(r));
  return out;
}

ImplicationBound<double> implication_bound(double p_p, double p_pq) {
  if (!(p_p > 0.0 && p_p <= 1.0)) throw Error(ErrorKind::domain, "P(p) must lie in (0,1]");
  if (!(p_pq >= 0.0)) throw Error(ErrorKind::domain, "P(pq) must be nonnegative");
  if (p_pq > p_p) throw Error(ErrorKind::inconsistent_input, "P(pq) cannot exceed P(p)");
  const double q_given_p = p_pq / p_p;
  const double implication = 1.0 - p_p + p_pq;
  // both sides are within a few ulps of 1 when P(pq) is close to P(p)
  return {q_given_p, implication, q_given_p <= implication + 4.0 * std::numeric_limits<double>::epsilon()};
}

ImplicationBound<Fraction> implication_bound(const Fraction& p_p, const Fraction& p_pq) {
  if (!(p_p > Fraction(0) && p_p <= Fraction(1))) throw Error(ErrorKind::domain, "P(p) must lie in (0,1]");
  if (p_pq < Fraction(0)) throw Error(ErrorKind::domain, "P(pq) must be nonnegative");
  if (p_pq > p_p) throw Error(ErrorKind::inconsistent_input, "P(pq) cannot exceed P(p)");
  const Fraction q_given_p = p_pq / p_p;
  const Fraction implication = Fraction(1) - p_p + p_pq;
  return {q_given_p, implication, q_given_p <= implication};
}

}  // namespace ptprob
