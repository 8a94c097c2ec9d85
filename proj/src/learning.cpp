#include "ptprob/learning.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>

#include "ptprob/error.hpp"
#include "ptprob/semantic.hpp"

namespace ptprob {

namespace {

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

Universe sample_universe(const LabeledSample& sample) {
  if (sample.examples.empty()) throw Error(ErrorKind::argument, "sample is empty");
  std::vector<std::string> ids;
  std::map<std::string, bool> seen;
  for (const auto& e : sample.examples)
    if (seen.emplace(e.x, true).second) ids.push_back(e.x);

  std::vector<Point> points;
  bool numeric = true;
  for (const auto& id : ids) {
    const auto v = parse_number(id);
    if (!v) {
      numeric = false;
      break;
    }
    points.push_back({id, {*v}});
  }
  if (!numeric) return Universe::from_ids(ids);
  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.coord[0] < b.coord[0]; });
  return Universe(std::move(points));
}

EmpiricalModel empirical_distributions(const LabeledSample& sample, const Universe& universe,
                                       const std::optional<std::vector<std::string>>& labels) {
  if (sample.examples.empty()) throw Error(ErrorKind::argument, "sample is empty");

  std::vector<std::string> names;
  std::map<std::string, std::size_t> label_pos;
  if (labels) {
    names = *labels;
    for (std::size_t j = 0; j < names.size(); ++j)
      if (!label_pos.emplace(names[j], j).second) throw Error(ErrorKind::argument, "duplicate label '" + names[j] + "'");
  } else {
    for (const auto& e : sample.examples)
      if (label_pos.emplace(e.label, names.size()).second) names.push_back(e.label);
  }

  const std::size_t m = universe.size();
  const std::size_t n = names.size();
  std::vector<std::vector<double>> joint(n, std::vector<double>(m, 0.0));
  std::vector<double> x_count(m, 0.0);
  std::vector<double> y_count(n, 0.0);
  for (const auto& e : sample.examples) {
    const std::size_t i = universe.index_of(e.x);
    const auto it = label_pos.find(e.label);
    if (it == label_pos.end()) throw Error(ErrorKind::argument, "sample label '" + e.label + "' is not in the label set");
    joint[it->second][i] += 1.0;
    x_count[i] += 1.0;
    y_count[it->second] += 1.0;
  }
  const double total = static_cast<double>(sample.examples.size());

  std::vector<double> px(m);
  for (std::size_t i = 0; i < m; ++i) px[i] = x_count[i] / total;
  std::vector<double> py(n);
  std::vector<Distribution> posteriors;
  for (std::size_t j = 0; j < n; ++j) {
    if (y_count[j] == 0.0) throw Error(ErrorKind::unused_label, "label '" + names[j] + "' has no examples");
    py[j] = y_count[j] / total;
    std::vector<double> post(m);
    for (std::size_t i = 0; i < m; ++i) post[i] = joint[j][i] / y_count[j];
    posteriors.emplace_back(universe, std::move(post), true);
  }

  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows[j][i] = x_count[i] > 0.0 ? joint[j][i] / x_count[i] : std::numeric_limits<double>::quiet_NaN();

  return {Distribution(universe, std::move(px), true), Distribution(Universe::from_ids(names), std::move(py), true),
          std::move(posteriors), ShannonChannel(universe, names, std::move(rows))};
}

EmpiricalModel empirical_distributions(const LabeledSample& sample) {
  return empirical_distributions(sample, sample_universe(sample));
}

SemanticChannel match_truth_functions(const ShannonChannel& channel) {
  const std::size_t m = channel.universe().size();
  std::vector<TruthFunction> truths;
  for (std::size_t j = 0; j < channel.label_count(); ++j) {
    std::vector<double> t(m, 0.0);
    double peak = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!channel.defined(i)) continue;
      t[i] = channel.value(j, i);
      peak = std::max(peak, t[i]);
    }
    if (!(peak > 0.0)) throw Error(ErrorKind::unused_label, "label '" + channel.labels()[j] + "' has an all-zero row");
    for (double& v : t) v /= peak;
    truths.push_back(TruthFunction::tabulated(channel.universe(), std::move(t)));
  }
  return SemanticChannel(channel.labels(), std::move(truths));
}

TruthFunction truth_from_sampling(const Distribution& posterior, const Distribution& prior) {
  return truth_from_likelihood(posterior, prior).truth;
}

// ---------------------------------------------------------------------------
// Parametric fitting

const char* family_name(Family f) { return f == Family::gaussian ? "gaussian" : "logistic"; }

std::array<const char*, 2> param_names(Family f) {
  if (f == Family::gaussian) return {"center", "sigma"};
  return {"slope", "threshold"};
}

TruthFunction FitResult::truth(const Universe& universe) const {
  if (family == Family::gaussian) return TruthFunction::gaussian(universe, params[0], params[1]);
  return TruthFunction::logistic(universe, params[0], params[1]);
}

namespace {

struct LogTruth {
  double value;
  std::array<double, 2> grad;
};

LogTruth log_truth(Family family, const std::array<double, 2>& p, double x) {
  if (family == Family::gaussian) {
    const double d = x - p[0];
    const double s2 = p[1] * p[1];
    return {-d * d / (2.0 * s2), {d / s2, d * d / (s2 * p[1])}};
  }
  const double z = p[0] * (x - p[1]);
  // log σ(z) and 1 - σ(z) without overflow
  const double log_t = z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
  const double one_minus = z >= 0.0 ? std::exp(-z) / (1.0 + std::exp(-z)) : 1.0 / (1.0 + std::exp(z));
  return {log_t, {(x - p[1]) * one_minus, -p[0] * one_minus}};
}

void check_fit_inputs(Family family, const std::array<double, 2>& p, const Distribution& sampling,
                      const Distribution& prior) {
  require_same(sampling.universe(), prior.universe(), "fit_parametric_truth");
  if (sampling.universe().dimension() != 1) throw Error(ErrorKind::form, "parametric fitting needs a scalar universe");
  if (family == Family::gaussian && !(p[1] > 0.0)) throw Error(ErrorKind::parameter, "gaussian sigma must be positive");
  for (std::size_t i = 0; i < prior.size(); ++i)
    if (sampling[i] > 0.0 && prior[i] <= 0.0)
      throw Error(ErrorKind::support, "sampling has mass on zero-prior point '" + prior.universe()[i].id + "'");
}

struct ObjectiveValue {
  double nats;
  std::array<double, 2> grad_nats;
};

ObjectiveValue evaluate_objective(Family family, const std::array<double, 2>& p, const Distribution& sampling,
                                  const Distribution& prior, bool with_gradient) {
  const Universe& u = prior.universe();
  const std::size_t m = prior.size();
  std::vector<LogTruth> lt(m);
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    lt[i] = log_truth(family, p, u.scalar(i));
    if (prior[i] > 0.0) peak = std::max(peak, std::log(prior[i]) + lt[i].value);
  }
  // log T(θ) by log-sum-exp; weights w_i = P(x_i) T_i / T(θ)
  double scaled = 0.0;
  std::vector<double> w(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (prior[i] <= 0.0) continue;
    w[i] = std::exp(std::log(prior[i]) + lt[i].value - peak);
    scaled += w[i];
  }
  const double log_lp = peak + std::log(scaled);

  ObjectiveValue out{0.0, {0.0, 0.0}};
  for (std::size_t i = 0; i < m; ++i) {
    if (sampling[i] > 0.0) {
      out.nats += sampling[i] * lt[i].value;
      if (with_gradient)
        for (int k = 0; k < 2; ++k) out.grad_nats[k] += sampling[i] * lt[i].grad[k];
    }
    if (with_gradient && w[i] > 0.0)
      for (int k = 0; k < 2; ++k) out.grad_nats[k] -= (w[i] / scaled) * lt[i].grad[k];
  }
  out.nats -= log_lp;
  return out;
}

double clamp_to(double v, const ParamBounds& b) { return std::clamp(v, b.lo, b.hi); }

// Maximizes f on [a, b]; returns the best abscissa seen.
template <typename F>
double golden_max(F&& f, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace

double fit_objective(Family family, std::array<double, 2> params, const Distribution& sampling,
                     const Distribution& prior) {
  check_fit_inputs(family, params, sampling, prior);
  return evaluate_objective(family, params, sampling, prior, false).nats / std::numbers::ln2;
}

std::array<double, 2> fit_objective_gradient(Family family, std::array<double, 2> params,
                                             const Distribution& sampling, const Distribution& prior) {
  check_fit_inputs(family, params, sampling, prior);
  const auto g = evaluate_objective(family, params, sampling, prior, true).grad_nats;
  return {g[0] / std::numbers::ln2, g[1] / std::numbers::ln2};
}

FitResult fit_parametric_truth(const Distribution& sampling, const std::optional<Distribution>& prior,
                               const FitOptions& options) {
  const Distribution p_x = prior ? *prior : Distribution::uniform(sampling.universe());
  const auto& bounds = options.bounds;
  for (const auto& b : bounds)
    if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || !(b.lo <= b.hi))
      throw Error(ErrorKind::parameter, "fit bounds must be finite with lo <= hi");
  if (options.family == Family::gaussian && !(bounds[1].lo > 0.0))
    throw Error(ErrorKind::parameter, "gaussian sigma bounds must be positive");
  if (options.grid < 2) throw Error(ErrorKind::parameter, "fit grid needs at least 2 points per axis");
  check_fit_inputs(options.family, {bounds[0].lo, bounds[1].lo}, sampling, p_x);

  const Family family = options.family;
  auto objective = [&](const std::array<double, 2>& p) {
    return evaluate_objective(family, p, sampling, p_x, false).nats;
  };

  FitResult result;
  result.family = family;
  result.prior_assumed_uniform = !prior.has_value();
  std::size_t support = 0;
  for (std::size_t i = 0; i < sampling.size(); ++i)
    if (sampling[i] > 0.0) ++support;
  result.unbounded_precision = support == 1;

  // Coarse grid, row-major, first maximum wins.
  const std::size_t g = options.grid;
  std::array<double, 2> range{bounds[0].hi - bounds[0].lo, bounds[1].hi - bounds[1].lo};
  auto node = [&](int k, std::size_t idx) {
    return bounds[k].lo + range[k] * static_cast<double>(idx) / static_cast<double>(g - 1);
  };
  std::array<double, 2> best{node(0, 0), node(1, 0)};
  double best_f = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) {
      const std::array<double, 2> p{node(0, a), node(1, b)};
      const double f = objective(p);
      if (f > best_f) {
        best_f = f;
        best = p;
      }
    }
  }
  result.trace.push_back(best_f / std::numbers::ln2);

  if (options.gradient_ascent) {
    double alpha = 1e-3;
    for (std::size_t it = 0; it < options.max_cycles; ++it) {
      const auto grad = evaluate_objective(family, best, sampling, p_x, true).grad_nats;
      bool moved = false;
      for (int tries = 0; tries < 80; ++tries) {
        std::array<double, 2> cand;
        for (int k = 0; k < 2; ++k) cand[k] = clamp_to(best[k] + alpha * range[k] * range[k] * grad[k], bounds[k]);
        const double f = objective(cand);
        if (f > best_f) {
          best = cand;
          best_f = f;
          alpha *= 2.0;
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      ++result.iterations;
      result.trace.push_back(best_f / std::numbers::ln2);
      if (!moved) break;
    }
  } else {
    std::array<double, 2> step{range[0] / static_cast<double>(g - 1), range[1] / static_cast<double>(g - 1)};
    for (std::size_t cycle = 0; cycle < options.max_cycles; ++cycle) {
      const double start_f = best_f;
      std::array<double, 2> moved{0.0, 0.0};
      for (int k = 0; k < 2; ++k) {
        if (range[k] == 0.0) continue;
        const double lo = std::max(bounds[k].lo, best[k] - step[k]);
        const double hi = std::min(bounds[k].hi, best[k] + step[k]);
        auto along = [&](double v) {
          auto p = best;
          p[k] = v;
          return objective(p);
        };
        const double v = golden_max(along, lo, hi);
        const double f = along(v);
        double delta = 0.0;
        if (f > best_f) {
          delta = v - best[k];
          best[k] = v;
          best_f = f;
        }
        moved[k] = std::abs(delta);
        // Widen when the optimum sat near the bracket edge, otherwise shrink.
        if (moved[k] > 0.5 * step[k])
          step[k] = std::min(range[k], 2.0 * step[k]);
        else
          step[k] = std::max({4.0 * moved[k], 0.25 * step[k], 1e-12 * range[k]});
      }
      ++result.iterations;
      result.trace.push_back(best_f / std::numbers::ln2);
      const bool still = moved[0] <= 1e-11 * range[0] && moved[1] <= 1e-11 * range[1];
      const bool tiny = step[0] <= 1e-10 * range[0] && step[1] <= 1e-10 * range[1];
      if (best_f - start_f <= 1e-15 * (1.0 + std::abs(best_f)) && still && tiny) break;
    }
  }

  result.params = best;
  result.objective_bits = best_f / std::numbers::ln2;
  for (int k = 0; k < 2; ++k) {
    const double eps = 1e-9 * std::max(range[k], 1.0);
    result.at_bound[k] = best[k] - bounds[k].lo <= eps || bounds[k].hi - best[k] <= eps;
  }
  return result;
}

// ---------------------------------------------------------------------------

std::size_t classify(const SemanticChannel& sc, const Distribution& prior, std::size_t i) {
  require_same(sc.universe(), prior.universe(), "classify");
  if (i >= prior.size()) throw Error(ErrorKind::argument, "point index outside the universe");
  std::optional<std::size_t> best;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < sc.size(); ++j) {
    const double lp = logical_probability(sc[j], prior);
    if (!(lp > 0.0))
      throw Error(ErrorKind::empty_fuzzy_set, "label '" + sc.labels()[j] + "' has zero logical probability");
    if (sc[j][i] <= 0.0) continue;
    const double score = std::log(sc[j][i]) - std::log(lp);
    if (!best || score > best_score) {
      best = j;
      best_score = score;
    }
  }
  if (!best) throw Error(ErrorKind::unclassifiable, "every label is false at point '" + prior.universe()[i].id + "'");
  return *best;
}

double random_set_membership(std::span<const std::set<std::string>> sets, const std::string& x) {
  if (sets.empty()) throw Error(ErrorKind::argument, "random set needs at least one subset");
  std::size_t hits = 0;
  for (const auto& s : sets)
    if (s.contains(x)) ++hits;
  return static_cast<double>(hits) / static_cast<double>(sets.size());
}

}  // namespace ptprob
