#include "ptprob/error.hpp"
#include "ptprob/fraction.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace ptprob {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::normalization: return "normalization";
    case ErrorKind::domain: return "domain";
    case ErrorKind::unreachable_label: return "unreachable label";
    case ErrorKind::conditioning: return "conditioning on impossible event";
    case ErrorKind::empty_fuzzy_set: return "empty fuzzy set under prior";
    case ErrorKind::support: return "support";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::argument: return "argument";
    case ErrorKind::unused_label: return "unused label";
    case ErrorKind::unclassifiable: return "unclassifiable";
    case ErrorKind::form: return "form";
    case ErrorKind::iteration_limit: return "iteration limit";
    case ErrorKind::count: return "count";
    case ErrorKind::undefined_measure: return "undefined measure";
    case ErrorKind::inconsistent_input: return "inconsistent input";
    case ErrorKind::expression: return "expression";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

namespace {

__extension__ typedef __int128 wide;

Fraction make_reduced(wide num, wide den) {
  if (den == 0) throw Error(ErrorKind::domain, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide a = num < 0 ? -num : num;
  wide b = den;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw Error(ErrorKind::domain, "fraction overflow");
  return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Fraction::Fraction(std::int64_t num) : num_(num), den_(1) {}

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::domain, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Fraction Fraction::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::parse, "not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Fraction n = parse(text.substr(0, slash));
    const Fraction d = parse(text.substr(slash + 1));
    return n / d;
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  wide num = 0;
  wide den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
    seen_digit = true;
    num = num * 10 + (ch - '0');
    if (seen_point) den *= 10;
    if (num > std::numeric_limits<std::int64_t>::max() || den > std::numeric_limits<std::int64_t>::max())
      throw fail();
  }
  if (!seen_digit) throw fail();
  return make_reduced(negative ? -num : num, den);
}

std::string Fraction::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return make_reduced(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return make_reduced(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return make_reduced(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw Error(ErrorKind::domain, "fraction division by zero");
  return make_reduced(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
}

Fraction max(const Fraction& a, const Fraction& b) { return a < b ? b : a; }
Fraction abs(const Fraction& a) { return a < Fraction(0) ? -a : a; }

}  // namespace ptprob
