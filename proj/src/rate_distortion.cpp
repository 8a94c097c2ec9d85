#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "ptprob/error.hpp"
#include "ptprob/prob_core.hpp"
#include "ptprob/rate_thermo.hpp"
#include "ptprob/sem_info.hpp"
#include "ptprob/semantic.hpp"

namespace ptprob {

DistortionMatrix::DistortionMatrix(std::vector<std::string> labels, std::vector<std::vector<double>> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.empty() || values_.empty()) throw Error(ErrorKind::dimension, "distortion matrix is empty");
  for (const auto& row : values_) {
    if (row.size() != labels_.size())
      throw Error(ErrorKind::dimension, "distortion row length does not match the label count");
    for (double v : row)
      if (!std::isfinite(v) || v < 0.0) throw Error(ErrorKind::domain, "distortion values must be finite and nonnegative");
  }
}

DistortionMatrix DistortionMatrix::hamming(const Universe& u) {
  const std::size_t n = u.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 0.0;
  return DistortionMatrix(u.ids(), std::move(v));
}

RdPoint rd_point(const Distribution& prior, const DistortionMatrix& d, double s) {
  if (!(s <= 0.0)) throw Error(ErrorKind::parameter, "slope s must be nonpositive");
  const std::size_t m = prior.size();
  const std::size_t n = d.cols();
  if (d.rows() != m) throw Error(ErrorKind::dimension, "distortion rows do not match the prior universe");

  std::vector<std::vector<double>> a(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = std::exp(s * d(i, j));

  std::vector<double> lambda(m);
  auto update_lambda = [&](const std::vector<double>& q) {
    for (std::size_t i = 0; i < m; ++i) {
      double l = 0.0;
      for (std::size_t j = 0; j < n; ++j) l += q[j] * a[i][j];
      lambda[i] = l;
    }
  };
  // c_j = Σ_i P(x_i) a_ij / λ_i; the update is P(y_j) <- P(y_j) c_j.
  auto multiplier = [&](std::size_t j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (prior[i] > 0.0) acc += prior[i] * a[i][j] / lambda[i];
    return acc;
  };
  // One update of q over the labels not yet pruned; returns the max relative change.
  auto sweep = [&](std::vector<double>& q, std::vector<bool>& out) {
    update_lambda(q);
    std::vector<double> next(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (!out[j]) next[j] = q[j] * multiplier(j);
    for (std::size_t j = 0; j < n; ++j)
      if (!out[j] && next[j] < kRdPruneBelow) {
        out[j] = true;
        next[j] = 0.0;
      }
    double total = 0.0;
    for (double v : next) total += v;
    double change = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      next[j] /= total;
      if (!out[j]) change = std::max(change, std::abs(next[j] - q[j]) / q[j]);
    }
    q = std::move(next);
    return change;
  };

  std::vector<double> py(n, 1.0 / static_cast<double>(n));
  std::vector<bool> pruned(n, false);
  std::size_t sweeps = 0;
  double change = std::numeric_limits<double>::infinity();
  std::set<std::vector<bool>> tried;

  while (change >= kRdTolerance) {
    if (sweeps == kRdMaxSweeps)
      throw Error(ErrorKind::iteration_limit, "rate-distortion iteration did not converge", change);
    change = sweep(py, pruned);
    ++sweeps;
    if (change < kRdTolerance || s == 0.0 || sweeps % 256 != 0) continue;

    // Labels leaving the support drain at a rate near 1 - |s| Δd, which is
    // hopeless for small |s|. Guess the support (labels still carrying mass,
    // or labels currently growing), solve on it, and keep the result when
    // every dropped label has c_j <= 1: the problem is convex, so that is the
    // global optimum.
    const double top = *std::max_element(py.begin(), py.end());
    update_lambda(py);
    std::vector<bool> by_mass(n), by_growth(n);
    for (std::size_t j = 0; j < n; ++j) {
      by_mass[j] = pruned[j] || py[j] < 1e-6 * top;
      by_growth[j] = pruned[j] || multiplier(j) < 1.0;
    }
    for (auto& out : {by_mass, by_growth}) {
      if (out == pruned || std::count(out.begin(), out.end(), false) == 0 || !tried.insert(out).second) continue;
      std::vector<double> q(n, 0.0);
      double total = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (!out[j]) total += py[j];
      for (std::size_t j = 0; j < n; ++j)
        if (!out[j]) q[j] = py[j] / total;
      std::vector<bool> q_out = out;
      double c = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < kRdMaxSweeps / 10 && c >= kRdTolerance; ++k, ++sweeps) c = sweep(q, q_out);
      if (c >= kRdTolerance) continue;
      update_lambda(q);
      bool optimal = true;
      for (std::size_t j = 0; j < n && optimal; ++j)
        if (q_out[j]) optimal = multiplier(j) <= 1.0 + 1e-12;
      if (!optimal) continue;
      py = std::move(q);
      pruned = std::move(q_out);
      change = c;
      break;
    }
  }
  update_lambda(py);

  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  double D = 0.0;
  double log_lambda = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[j][i] = py[j] * a[i][j] / lambda[i];
      D += prior[i] * rows[j][i] * d(i, j);
    }
    if (prior[i] > 0.0) log_lambda += prior[i] * std::log(lambda[i]);
  }
  const double r_nats = std::max(0.0, s * D - log_lambda);

  std::vector<std::string> dropped;
  for (std::size_t j = 0; j < n; ++j)
    if (pruned[j]) dropped.push_back(d.labels()[j]);
  return {s,
          D,
          from_nats(r_nats, LogBase::bits),
          Distribution(Universe::from_ids(d.labels()), std::move(py), true),
          ShannonChannel(prior.universe(), d.labels(), std::move(rows)),
          std::move(dropped),
          sweeps};
}

std::vector<RdPoint> rd_curve(const Distribution& prior, const DistortionMatrix& d, std::span<const double> s_grid) {
  for (std::size_t k = 0; k < s_grid.size(); ++k) {
    if (!(s_grid[k] <= 0.0)) throw Error(ErrorKind::parameter, "s grid values must be nonpositive");
    if (k > 0 && s_grid[k] > s_grid[k - 1]) throw Error(ErrorKind::parameter, "s grid must be sorted descending");
  }
  std::vector<RdPoint> out;
  out.reserve(s_grid.size());
  for (double s : s_grid) out.push_back(rd_point(prior, d, s));
  return out;
}

double r_theta_from_rd(const RdPoint& rd, const Distribution& prior, const DistortionMatrix& d) {
  const Distribution& py = rd.reproduction_prior;
  const std::size_t m = prior.size();
  const std::size_t n = py.size();
  if (d.rows() != m || d.cols() != n) throw Error(ErrorKind::dimension, "distortion matrix does not match the rate point");
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (prior[i] <= 0.0) continue;
    std::vector<double> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = std::exp(rd.s * d(i, j));
    const TruthFunction truth = TruthFunction::tabulated(py.universe(), std::move(t));
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double p = rd.channel.value(j, i);
      if (p > 0.0) row += p * semantic_info_point(truth, py, j, LogBase::nats);
    }
    total += prior[i] * row;
  }
  return from_nats(std::max(0.0, total), LogBase::bits);
}

DcfMinimum dcf_minimum_info(const SemanticChannel& dcfs, const Distribution& prior, const Distribution& label_prior) {
  if (label_prior.size() != dcfs.size()) throw Error(ErrorKind::dimension, "label prior does not match the DCF labels");
  double min_info = 0.0;
  std::vector<double> per_label;
  std::vector<Distribution> posteriors;
  for (std::size_t j = 0; j < dcfs.size(); ++j) {
    Distribution post = semantic_bayes_predict(dcfs[j], prior);
    const double info = kl_divergence(post, prior, LogBase::bits);
    per_label.push_back(info);
    min_info += label_prior[j] * info;
    posteriors.push_back(std::move(post));
  }
  const auto mass = label_prior.mass();
  const Distribution named(Universe::from_ids(dcfs.labels()), std::vector<double>(mass.begin(), mass.end()));
  ShannonChannel channel = bayes_inverse(posteriors, named).channel;
  return {min_info, std::move(per_label), std::move(posteriors), std::move(channel)};
}

}  // namespace ptprob
