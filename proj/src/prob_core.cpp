#include "ptprob/prob_core.hpp"

#include <algorithm>
#include <string>

#include "ptprob/error.hpp"

namespace ptprob {

const char* unit_name(LogBase base) { return base == LogBase::bits ? "bits" : "nats"; }

BayesPosterior bayes_posterior(const Distribution& prior, std::span<const double> tpf_row) {
  if (tpf_row.size() != prior.size())
    throw Error(ErrorKind::dimension, "transition row length does not match the prior's universe");
  // Undefined (NaN) entries are tolerated where the prior has no mass.
  double label_prob = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (prior[i] == 0.0 && std::isnan(tpf_row[i])) continue;
    const double v = tpf_row[i];
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::domain, "transition probability outside [0,1]");
    label_prob += v * prior[i];
  }
  if (!(label_prob > 0.0)) throw Error(ErrorKind::unreachable_label, "label has zero probability under the prior");

  std::vector<double> post(prior.size(), 0.0);
  for (std::size_t i = 0; i < prior.size(); ++i)
    if (prior[i] > 0.0) post[i] = tpf_row[i] * prior[i] / label_prob;
  return {label_prob, Distribution(prior.universe(), std::move(post))};
}

BayesInverse bayes_inverse(std::span<const Distribution> posteriors, const Distribution& label_prior) {
  if (posteriors.size() != label_prior.size())
    throw Error(ErrorKind::dimension, "one posterior per label is required");
  if (posteriors.empty()) throw Error(ErrorKind::argument, "no posteriors");
  const Universe& universe = posteriors.front().universe();
  for (const auto& p : posteriors) require_same(universe, p.universe(), "bayes_inverse");

  const std::size_t m = universe.size();
  const std::size_t n = posteriors.size();
  std::vector<double> mix(m, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) mix[i] += posteriors[j][i] * label_prior[j];

  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (mix[i] > 0.0) {
      for (std::size_t j = 0; j < n; ++j) rows[j][i] = std::min(1.0, posteriors[j][i] * label_prior[j] / mix[i]);
    } else {
      for (std::size_t j = 0; j < n; ++j) rows[j][i] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return {ShannonChannel(universe, label_prior.universe().ids(), std::move(rows)),
          Distribution(universe, std::move(mix))};
}

Universe label_universe(const ShannonChannel& channel) { return Universe::from_ids(channel.labels()); }

Fraction label_probability(std::span<const Fraction> prior, std::span<const Fraction> tpf_row) {
  if (prior.size() != tpf_row.size()) throw Error(ErrorKind::dimension, "transition row length does not match the prior");
  Fraction total;
  Fraction out;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (prior[i] < Fraction(0)) throw Error(ErrorKind::domain, "negative probability mass");
    if (tpf_row[i] < Fraction(0) || tpf_row[i] > Fraction(1))
      throw Error(ErrorKind::domain, "transition probability outside [0,1]");
    total = total + prior[i];
    out = out + prior[i] * tpf_row[i];
  }
  if (total != Fraction(1)) throw Error(ErrorKind::normalization, "exact prior does not sum to 1");
  return out;
}

namespace {

void check_aligned(const Distribution& prior, const ShannonChannel& channel) {
  require_same(prior.universe(), channel.universe(), "prior vs channel");
  for (std::size_t i = 0; i < prior.size(); ++i)
    if (prior[i] > 0.0 && !channel.defined(i))
      throw Error(ErrorKind::domain, "channel undefined at '" + prior.universe()[i].id + "' which has prior mass");
}

}  // namespace

ChannelPredictions predict_all(const Distribution& prior, const ShannonChannel& channel) {
  check_aligned(prior, channel);
  const std::size_t n = channel.label_count();
  const std::size_t m = prior.size();
  std::vector<double> label_mass(n, 0.0);
  std::vector<std::optional<Distribution>> posteriors;
  posteriors.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i)
      if (prior[i] > 0.0) label_mass[j] += channel.value(j, i) * prior[i];
    if (label_mass[j] > 0.0) {
      std::vector<double> post(m, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        if (prior[i] > 0.0) post[i] = channel.value(j, i) * prior[i] / label_mass[j];
      posteriors.emplace_back(Distribution(prior.universe(), std::move(post)));
    } else {
      posteriors.emplace_back(std::nullopt);
    }
  }
  return {Distribution(label_universe(channel), std::move(label_mass), true), std::move(posteriors)};
}

double shannon_mutual_info(const Distribution& prior, const ShannonChannel& channel, LogBase base) {
  check_aligned(prior, channel);
  const std::size_t n = channel.label_count();
  const std::size_t m = prior.size();
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double label_prob = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (prior[i] > 0.0) label_prob += channel.value(j, i) * prior[i];
    if (label_prob <= 0.0) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if (prior[i] <= 0.0) continue;
      const double tpf = channel.value(j, i);
      if (tpf <= 0.0) continue;
      // P(x|y)/P(x) = P(y|x)/P(y)
      total += prior[i] * tpf * std::log(tpf / label_prob);
    }
  }
  return from_nats(std::max(total, 0.0), base);
}

double kl_divergence(const Distribution& posterior, const Distribution& prior, LogBase base) {
  require_same(posterior.universe(), prior.universe(), "kl_divergence");
  double total = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    const double p = posterior[i];
    if (p <= 0.0) continue;
    if (prior[i] <= 0.0) return kInf;
    total += p * std::log(p / prior[i]);
  }
  return from_nats(std::max(total, 0.0), base);
}

double entropy(const Distribution& d, LogBase base) {
  double total = 0.0;
  for (double p : d.mass())
    if (p > 0.0) total -= p * std::log(p);
  return from_nats(total, base);
}

ShannonChannel merge_labels(const ShannonChannel& channel, std::size_t j, std::size_t k) {
  const std::size_t n = channel.label_count();
  if (j >= n || k >= n || j == k) throw Error(ErrorKind::argument, "merge_labels needs two distinct label indices");
  const std::size_t keep = std::min(j, k);
  const std::size_t drop = std::max(j, k);
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == drop) continue;
    std::vector<double> row(channel.row(r).begin(), channel.row(r).end());
    std::string label = channel.labels()[r];
    if (r == keep) {
      label = channel.labels()[j] + "+" + channel.labels()[k];
      for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = channel.defined(i) ? std::min(1.0, row[i] + channel.row(drop)[i]) : row[i];
    }
    labels.push_back(std::move(label));
    rows.push_back(std::move(row));
  }
  return ShannonChannel(channel.universe(), std::move(labels), std::move(rows));
}

}  // namespace ptprob
