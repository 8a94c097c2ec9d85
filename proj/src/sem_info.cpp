#include "ptprob/sem_info.hpp"

#include <cmath>
#include <variant>

#include "ptprob/error.hpp"
#include "ptprob/semantic.hpp"

namespace ptprob {

namespace {

double require_positive_lp(const TruthFunction& t, const Distribution& prior) {
  const double lp = logical_probability(t, prior);
  if (!(lp > 0.0)) throw Error(ErrorKind::empty_fuzzy_set, "truth function has zero logical probability under the prior");
  return lp;
}

void require_matching_labels(const SemanticChannel& sc, const ShannonChannel& channel) {
  if (sc.labels() != channel.labels()) throw Error(ErrorKind::dimension, "semantic and Shannon channel labels differ");
  require_same(sc.universe(), channel.universe(), "semantic vs Shannon channel");
}

}  // namespace

double semantic_info_point(const TruthFunction& t, const Distribution& prior, std::size_t i, LogBase base) {
  const double lp = require_positive_lp(t, prior);
  const double tv = eval_truth(t, i);
  if (tv <= 0.0) return -kInf;
  return from_nats(std::log(tv / lp), base);
}

AverageInfo avg_semantic_info(const TruthFunction& t, const Distribution& sampling, const Distribution& prior,
                              LogBase base) {
  require_same(sampling.universe(), prior.universe(), "avg_semantic_info");
  const double lp = require_positive_lp(t, prior);
  double total = 0.0;
  std::size_t falsifying = 0;
  for (std::size_t i = 0; i < sampling.size(); ++i) {
    if (sampling[i] <= 0.0) continue;
    if (t[i] <= 0.0) {
      ++falsifying;
      continue;
    }
    total += sampling[i] * std::log(t[i] / lp);
  }
  if (falsifying > 0) return {-kInf, falsifying};
  return {from_nats(total, base), 0};
}

SemanticInfoReport semantic_mutual_info(const SemanticChannel& sc, const Distribution& prior,
                                        const ShannonChannel& channel, LogBase base) {
  require_matching_labels(sc, channel);
  require_same(sc.universe(), prior.universe(), "semantic channel vs prior");

  SemanticInfoReport report;
  report.units = base;
  const auto predictions = predict_all(prior, channel);
  const std::size_t n = sc.size();
  const std::size_t m = prior.size();

  double total = 0.0;
  bool falsified = false;
  for (std::size_t j = 0; j < n; ++j) {
    const TruthFunction& t = sc[j];
    const double lp = require_positive_lp(t, prior);
    report.logical_probs.push_back(lp);

    std::vector<double> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = t[i] > 0.0 ? from_nats(std::log(t[i] / lp), base) : -kInf;
    report.point_info.push_back(std::move(row));

    if (const auto& post = predictions.posteriors[j]) {
      const AverageInfo avg = avg_semantic_info(t, *post, prior, base);
      report.avg_info.emplace_back(avg.value);
      report.falsifying_points.push_back(avg.falsifying_points);
      if (avg.falsifying_points > 0) {
        falsified = true;
      } else {
        total += predictions.label_prior[j] * avg.value;
      }
    } else {
      report.avg_info.emplace_back(std::nullopt);
      report.falsifying_points.push_back(0);
    }
  }
  report.mutual_info = falsified ? -kInf : total;
  report.shannon_mutual_info = shannon_mutual_info(prior, channel, base);
  return report;
}

GaussianDecomposition gaussian_decomposition(const SemanticChannel& sc, const Distribution& prior,
                                             const ShannonChannel& channel) {
  require_matching_labels(sc, channel);
  require_same(sc.universe(), prior.universe(), "semantic channel vs prior");
  const Universe& u = prior.universe();
  if (u.dimension() == 0) throw Error(ErrorKind::form, "gaussian decomposition needs numeric coordinates");

  const std::size_t n = sc.size();
  const std::size_t m = prior.size();
  double entropy_term = 0.0;
  double squared_error = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto* g = std::get_if<form::Gaussian>(&sc[j].form());
    if (g == nullptr)
      throw Error(ErrorKind::form, "label '" + sc.labels()[j] + "' is not a gaussian truth function");
    const double lp = require_positive_lp(sc[j], prior);
    double label_prob = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (prior[i] <= 0.0) continue;
      const double joint = prior[i] * channel.value(j, i);
      label_prob += joint;
      double sq = 0.0;
      for (std::size_t k = 0; k < g->center.size(); ++k) {
        const double d = u[i].coord[k] - g->center[k];
        sq += d * d;
      }
      squared_error += joint * sq / (2.0 * g->sigma * g->sigma);
    }
    entropy_term -= label_prob * std::log(lp);
  }
  const double direct = semantic_mutual_info(sc, prior, channel, LogBase::nats).mutual_info;
  return {direct, entropy_term, squared_error, std::abs(direct - (entropy_term - squared_error))};
}

double effective_control_amount(const Distribution& ideal, const Distribution& actual, const Distribution& prior,
                                LogBase base) {
  require_same(ideal.universe(), prior.universe(), "effective_control_amount");
  require_same(actual.universe(), prior.universe(), "effective_control_amount");
  double total = 0.0;
  bool neg_inf = false;
  bool pos_inf = false;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (ideal[i] <= 0.0) continue;
    if (actual[i] <= 0.0) {
      neg_inf = true;  // the actual distribution never reaches an ideal point
    } else if (prior[i] <= 0.0) {
      pos_inf = true;
    } else {
      total += ideal[i] * std::log(actual[i] / prior[i]);
    }
  }
  if (neg_inf) return -kInf;
  if (pos_inf) return kInf;
  return from_nats(total, base);
}

}  // namespace ptprob
