#include "ptprob/truth_function.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "ptprob/error.hpp"

namespace ptprob {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<double> evaluate(const Universe& u, const form::Tabulated& f) {
  if (f.values.size() != u.size()) throw Error(ErrorKind::dimension, "tabulated truth length does not match universe");
  for (double v : f.values)
    if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::domain, "tabulated truth value outside [0,1]");
  return f.values;
}

std::vector<double> evaluate(const Universe& u, const form::Gaussian& f) {
  if (!(f.sigma > 0.0) || !std::isfinite(f.sigma)) throw Error(ErrorKind::parameter, "gaussian sigma must be > 0");
  if (u.dimension() == 0) throw Error(ErrorKind::form, "gaussian truth needs universe coordinates");
  if (f.center.size() != u.dimension()) throw Error(ErrorKind::dimension, "gaussian center dimension mismatch");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double sq = 0.0;
    for (std::size_t k = 0; k < f.center.size(); ++k) {
      const double d = u[i].coord[k] - f.center[k];
      sq += d * d;
    }
    out[i] = std::exp(-sq / (2.0 * f.sigma * f.sigma));
  }
  return out;
}

std::vector<double> evaluate(const Universe& u, const form::MvGaussian& f) {
  if (u.dimension() == 0) throw Error(ErrorKind::form, "multivariate gaussian truth needs universe coordinates");
  if (f.centers.size() != u.dimension() || f.sigmas.size() != u.dimension())
    throw Error(ErrorKind::dimension, "multivariate gaussian parameter dimension mismatch");
  for (double s : f.sigmas)
    if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorKind::parameter, "gaussian sigma must be > 0");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double expo = 0.0;
    for (std::size_t k = 0; k < f.centers.size(); ++k) {
      const double d = u[i].coord[k] - f.centers[k];
      expo += d * d / (2.0 * f.sigmas[k] * f.sigmas[k]);
    }
    out[i] = std::exp(-expo);
  }
  return out;
}

std::vector<double> evaluate(const Universe& u, const form::Logistic& f) {
  if (!std::isfinite(f.slope) || !std::isfinite(f.threshold))
    throw Error(ErrorKind::parameter, "logistic parameters must be finite");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = 1.0 / (1.0 + std::exp(-f.slope * (u.scalar(i) - f.threshold)));
  return out;
}

std::vector<double> evaluate(const Universe& u, const form::Believable& f) {
  if (f.indicator.size() != u.size()) throw Error(ErrorKind::dimension, "believable-part indicator length mismatch");
  if (!(f.disbelief >= 0.0 && f.disbelief <= 1.0)) throw Error(ErrorKind::parameter, "disbelief must lie in [0,1]");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.disbelief + (1.0 - f.disbelief) * (f.indicator[i] ? 1.0 : 0.0);
  return out;
}

std::vector<double> evaluate(const Universe& u, const form::Crisp& f) {
  if (f.members.size() != u.size()) throw Error(ErrorKind::dimension, "crisp membership length mismatch");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.members[i] ? 1.0 : 0.0;
  return out;
}

}  // namespace

std::string_view form_name(const TruthForm& f) {
  return std::visit(overloaded{
                        [](const form::Tabulated&) { return std::string_view("tabulated"); },
                        [](const form::Gaussian&) { return std::string_view("gaussian"); },
                        [](const form::MvGaussian&) { return std::string_view("mvgaussian"); },
                        [](const form::Logistic&) { return std::string_view("logistic"); },
                        [](const form::Believable&) { return std::string_view("believable"); },
                        [](const form::Crisp&) { return std::string_view("crisp"); },
                    },
                    f);
}

TruthFunction::TruthFunction(Universe universe, TruthForm form)
    : universe_(std::move(universe)), form_(std::move(form)) {
  values_ = std::visit([this](const auto& f) { return evaluate(universe_, f); }, form_);
}

TruthFunction TruthFunction::tautology(Universe universe) {
  const std::size_t n = universe.size();
  return TruthFunction(std::move(universe), form::Crisp{std::vector<bool>(n, true)});
}

TruthFunction TruthFunction::tabulated(Universe universe, std::vector<double> values) {
  return TruthFunction(std::move(universe), form::Tabulated{std::move(values)});
}

TruthFunction TruthFunction::gaussian(Universe universe, double center, double sigma) {
  return TruthFunction(std::move(universe), form::Gaussian{{center}, sigma});
}

TruthFunction TruthFunction::logistic(Universe universe, double slope, double threshold) {
  return TruthFunction(std::move(universe), form::Logistic{slope, threshold});
}

TruthFunction TruthFunction::crisp(Universe universe, std::vector<bool> members) {
  return TruthFunction(std::move(universe), form::Crisp{std::move(members)});
}

double TruthFunction::max_value() const noexcept { return *std::max_element(values_.begin(), values_.end()); }

SemanticChannel::SemanticChannel(std::vector<std::string> labels, std::vector<TruthFunction> truths)
    : labels_(std::move(labels)), truths_(std::move(truths)) {
  if (truths_.empty()) throw Error(ErrorKind::argument, "semantic channel needs at least one truth function");
  if (labels_.size() != truths_.size()) throw Error(ErrorKind::dimension, "one label per truth function is required");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorKind::argument, "duplicate label '" + l + "'");
  for (const auto& t : truths_) require_same(truths_.front().universe(), t.universe(), "semantic channel");
}

std::size_t SemanticChannel::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::argument, "unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

}  // namespace ptprob
