#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ptprob {

// One point of a finite universe. The coordinate is optional; when present
// every point in the universe carries one of the same dimension.
struct Point {
  std::string id;
  std::vector<double> coord;

  bool has_coord() const noexcept { return !coord.empty(); }
  friend bool operator==(const Point&, const Point&) = default;
};

// Ordered finite set of distinct points. Copies share the underlying storage,
// so passing a Universe by value is cheap.
class Universe {
 public:
  explicit Universe(std::vector<Point> points);

  // Points named by `ids`, without coordinates.
  static Universe from_ids(const std::vector<std::string>& ids);
  // Scalar coordinates; ids are the shortest round-trip rendering of each value.
  static Universe from_coords(std::span<const double> coords);
  // n evenly spaced scalar points from lo to hi inclusive.
  static Universe grid(double lo, double hi, std::size_t n);

  std::size_t size() const noexcept { return points_->size(); }
  const Point& operator[](std::size_t i) const { return (*points_)[i]; }
  const std::vector<Point>& points() const noexcept { return *points_; }
  std::vector<std::string> ids() const;

  // Coordinate dimension, 0 when the universe carries no coordinates.
  std::size_t dimension() const noexcept { return dimension_; }
  // Scalar coordinate of point i; throws a form error unless dimension() == 1.
  double scalar(std::size_t i) const;

  std::optional<std::size_t> find(const std::string& id) const;
  // Like find() but throws an argument error for unknown ids.
  std::size_t index_of(const std::string& id) const;

  friend bool operator==(const Universe& a, const Universe& b);

 private:
  std::shared_ptr<const std::vector<Point>> points_;
  std::size_t dimension_ = 0;
};

// Throws a dimension error unless the two universes are equal.
void require_same(const Universe& a, const Universe& b, const char* context);

}  // namespace ptprob
