#include "ptprob/channel.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "ptprob/distribution.hpp"
#include "ptprob/error.hpp"

namespace ptprob {

ShannonChannel::ShannonChannel(Universe universe, std::vector<std::string> labels,
                               std::vector<std::vector<double>> rows)
    : universe_(std::move(universe)), labels_(std::move(labels)), rows_(std::move(rows)) {
  if (labels_.empty()) throw Error(ErrorKind::argument, "channel needs at least one label");
  if (rows_.size() != labels_.size())
    throw Error(ErrorKind::dimension, "channel has " + std::to_string(rows_.size()) + " rows for " +
                                          std::to_string(labels_.size()) + " labels");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorKind::argument, "duplicate label '" + l + "'");

  const std::size_t m = universe_.size();
  for (const auto& r : rows_)
    if (r.size() != m) throw Error(ErrorKind::dimension, "channel row length does not match universe");

  defined_.assign(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t nan_count = 0;
    double total = 0.0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const double v = rows_[j][i];
      if (std::isnan(v)) {
        ++nan_count;
        continue;
      }
      if (!(v >= 0.0 && v <= 1.0))
        throw Error(ErrorKind::domain, "channel value outside [0,1] at '" + universe_[i].id + "'");
      total += v;
    }
    if (nan_count == rows_.size()) {
      defined_[i] = false;
    } else if (nan_count != 0) {
      throw Error(ErrorKind::domain, "partially undefined channel column at '" + universe_[i].id + "'");
    } else if (std::abs(total - 1.0) > kNormTolerance) {
      throw Error(ErrorKind::normalization,
                  "channel column at '" + universe_[i].id + "' sums to " + std::to_string(total));
    }
  }
}

std::size_t ShannonChannel::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::argument, "unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool ShannonChannel::fully_defined() const noexcept {
  return std::all_of(defined_.begin(), defined_.end(), [](bool d) { return d; });
}

double ShannonChannel::value(std::size_t j, std::size_t i) const {
  if (!defined_[i])
    throw Error(ErrorKind::domain, "channel is undefined at '" + universe_[i].id + "'");
  return rows_[j][i];
}

}  // namespace ptprob
