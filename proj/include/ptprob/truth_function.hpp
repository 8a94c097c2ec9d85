#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptprob/universe.hpp"

namespace ptprob {

// Truth-function (membership-function) forms. Coordinates come from the
// universe; forms other than tabulated/believable/crisp need them.
namespace form {

struct Tabulated {
  std::vector<double> values;
};

// exp(-|x - center|^2 / (2 sigma^2)), with |.| the Euclidean norm.
struct Gaussian {
  std::vector<double> center;
  double sigma = 1.0;
};

// Independent axes: exp(-Σ_k (x_k - c_k)^2 / (2 sigma_k^2)).
struct MvGaussian {
  std::vector<double> centers;
  std::vector<double> sigmas;
};

// 1 / (1 + exp(-slope (x - threshold))). Only reaches 1 asymptotically.
struct Logistic {
  double slope = 1.0;
  double threshold = 0.0;
};

// b' + (1 - b') * indicator(x), with b' the disbelief in [0,1].
struct Believable {
  std::vector<bool> indicator;
  double disbelief = 0.0;
};

struct Crisp {
  std::vector<bool> members;
};

}  // namespace form

using TruthForm =
    std::variant<form::Tabulated, form::Gaussian, form::MvGaussian, form::Logistic, form::Believable, form::Crisp>;

std::string_view form_name(const TruthForm& f);

// T(θ|x) over a finite universe. Values are evaluated once at construction
// and always lie in [0,1].
class TruthFunction {
 public:
  TruthFunction(Universe universe, TruthForm form);

  static TruthFunction tautology(Universe universe);
  static TruthFunction tabulated(Universe universe, std::vector<double> values);
  static TruthFunction gaussian(Universe universe, double center, double sigma);
  static TruthFunction logistic(Universe universe, double slope, double threshold);
  static TruthFunction crisp(Universe universe, std::vector<bool> members);

  const Universe& universe() const noexcept { return universe_; }
  const TruthForm& form() const noexcept { return form_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  double max_value() const noexcept;

 private:
  Universe universe_;
  TruthForm form_;
  std::vector<double> values_;
};

// Ordered truth functions over one shared universe. No column-sum constraint.
class SemanticChannel {
 public:
  SemanticChannel(std::vector<std::string> labels, std::vector<TruthFunction> truths);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<TruthFunction>& truths() const noexcept { return truths_; }
  const TruthFunction& operator[](std::size_t j) const { return truths_[j]; }
  std::size_t size() const noexcept { return truths_.size(); }
  const Universe& universe() const { return truths_.front().universe(); }
  std::size_t label_index(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<TruthFunction> truths_;
};

}  // namespace ptprob
