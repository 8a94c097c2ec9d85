#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ptprob {

// Exact rational with a positive denominator, always in lowest terms.
// Used where counts make exact arithmetic possible (confirmation measures,
// decimal probability inputs). Overflow is checked and throws.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Fraction(std::int64_t num, std::int64_t den);

  // Parses "3", "-2/7" or a plain decimal such as "0.02" exactly.
  static Fraction parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction operator-() const;

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Fraction max(const Fraction& a, const Fraction& b);
Fraction abs(const Fraction& a);

}  // namespace ptprob
