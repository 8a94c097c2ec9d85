#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ptprob/universe.hpp"

namespace ptprob {

// Transition probability functions P(y_j|x), one row per label.
//
// A column may be undefined (e.g. where P(x) = 0 after inversion, or where an
// instance never occurs in a sample). Undefined cells are stored as NaN and
// the whole column must then be NaN; value() refuses to read them. Defined
// columns sum to 1 over labels within kNormTolerance.
class ShannonChannel {
 public:
  ShannonChannel(Universe universe, std::vector<std::string> labels, std::vector<std::vector<double>> rows);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::size_t label_index(const std::string& label) const;

  bool defined(std::size_t i) const { return defined_[i]; }
  bool fully_defined() const noexcept;
  // P(y_j|x_i); throws a domain error on an undefined column.
  double value(std::size_t j, std::size_t i) const;
  // Raw row, NaN where undefined.
  std::span<const double> row(std::size_t j) const { return rows_[j]; }

 private:
  Universe universe_;
  std::vector<std::string> labels_;
  std::vector<std::vector<double>> rows_;
  std::vector<bool> defined_;
};

}  // namespace ptprob
