#include "ptprob/universe.hpp"

#include <cstdio>
#include <unordered_set>

#include "ptprob/error.hpp"

namespace ptprob {

namespace {

std::string shortest(double v) {
  char buf[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

Universe::Universe(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorKind::argument, "universe must be nonempty");
  std::unordered_set<std::string> seen;
  dimension_ = points.front().coord.size();
  for (const auto& p : points) {
    if (!seen.insert(p.id).second) throw Error(ErrorKind::argument, "duplicate universe point id '" + p.id + "'");
    if (p.coord.size() != dimension_)
      throw Error(ErrorKind::dimension, "universe point '" + p.id + "' has coordinate dimension " +
                                            std::to_string(p.coord.size()) + ", expected " +
                                            std::to_string(dimension_));
  }
  points_ = std::make_shared<const std::vector<Point>>(std::move(points));
}

Universe Universe::from_ids(const std::vector<std::string>& ids) {
  std::vector<Point> points;
  points.reserve(ids.size());
  for (const auto& id : ids) points.push_back({id, {}});
  return Universe(std::move(points));
}

Universe Universe::from_coords(std::span<const double> coords) {
  std::vector<Point> points;
  points.reserve(coords.size());
  for (double c : coords) points.push_back({shortest(c), {c}});
  return Universe(std::move(points));
}

Universe Universe::grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::argument, "grid needs at least one point");
  std::vector<double> coords(n);
  for (std::size_t i = 0; i < n; ++i)
    coords[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return from_coords(coords);
}

std::vector<std::string> Universe::ids() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& p : *points_) out.push_back(p.id);
  return out;
}

double Universe::scalar(std::size_t i) const {
  if (dimension_ != 1) throw Error(ErrorKind::form, "operation needs scalar universe coordinates");
  return (*points_)[i].coord[0];
}

std::optional<std::size_t> Universe::find(const std::string& id) const {
  for (std::size_t i = 0; i < points_->size(); ++i)
    if ((*points_)[i].id == id) return i;
  return std::nullopt;
}

std::size_t Universe::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::argument, "point '" + id + "' is not in the universe");
}

bool operator==(const Universe& a, const Universe& b) {
  return a.points_ == b.points_ || *a.points_ == *b.points_;
}

void require_same(const Universe& a, const Universe& b, const char* context) {
  if (!(a == b)) throw Error(ErrorKind::dimension, std::string(context) + ": universes differ");
}

}  // namespace ptprob
