#include "ptprob/confirmation.hpp"

#include <cmath>
#include <limits>

#include "ptprob/error.hpp"

namespace ptprob {

namespace {

void check(const ConfusionCounts& k) {
  if (k.a < 0 || k.b < 0 || k.c < 0 || k.d < 0) throw Error(ErrorKind::count, "counts must be nonnegative");
}

Fraction ratio(const Fraction& num, const Fraction& den, const char* what) {
  if (den == Fraction(0)) throw Error(ErrorKind::undefined_measure, std::string(what) + " is undefined (zero denominator)");
  return num / den;
}

Fraction cross(const ConfusionCounts& k) { return Fraction(k.a) * Fraction(k.d) - Fraction(k.b) * Fraction(k.c); }

double likelihood_ratio(std::int64_t num_hit, std::int64_t num_row, std::int64_t den_hit, std::int64_t den_row,
                        const char* what) {
  if (num_row == 0 || den_row == 0) throw Error(ErrorKind::count, "contingency row is empty");
  if (num_hit == 0 && den_hit == 0) throw Error(ErrorKind::undefined_measure, std::string(what) + " is 0/0");
  if (den_hit == 0) return std::numeric_limits<double>::infinity();
  return (Fraction(num_hit, num_row) / Fraction(den_hit, den_row)).value();
}

template <typename F>
auto maybe(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::undefined_measure || e.kind() == ErrorKind::count) return std::nullopt;
    throw;
  }
}

}  // namespace

ChannelTable channel_table(const ConfusionCounts& k) {
  check(k);
  const std::int64_t h1 = k.a + k.b;
  const std::int64_t h0 = k.c + k.d;
  if (h1 == 0 || h0 == 0) throw Error(ErrorKind::count, "each hypothesis row needs at least one example");
  return {Fraction(k.a, h1).value(), Fraction(k.b, h1).value(), Fraction(k.c, h0).value(), Fraction(k.d, h0).value()};
}

Fraction b1_star_exact(const ConfusionCounts& k) {
  check(k);
  const Fraction den = max(Fraction(k.a) * Fraction(k.c + k.d), Fraction(k.c) * Fraction(k.a + k.b));
  return ratio(cross(k), den, "b1*");
}

Fraction b0_star_exact(const ConfusionCounts& k) {
  check(k);
  const Fraction den = max(Fraction(k.d) * Fraction(k.a + k.b), Fraction(k.b) * Fraction(k.c + k.d));
  return ratio(cross(k), den, "b0*");
}

Fraction f1_exact(const ConfusionCounts& k) {
  check(k);
  const Fraction ad = Fraction(k.a) * Fraction(k.d);
  const Fraction bc = Fraction(k.b) * Fraction(k.c);
  return ratio(ad - bc, ad + bc + Fraction(2) * Fraction(k.a) * Fraction(k.c), "F(e1->h1)");
}

Fraction f0_exact(const ConfusionCounts& k) {
  check(k);
  const Fraction ad = Fraction(k.a) * Fraction(k.d);
  const Fraction bc = Fraction(k.b) * Fraction(k.c);
  return ratio(ad - bc, ad + bc + Fraction(2) * Fraction(k.d) * Fraction(k.c), "F(h0->e0)");
}

Fraction c1_star_exact(const ConfusionCounts& k) {
  check(k);
  return ratio(Fraction(k.a - k.c), Fraction(std::max(k.a, k.c)), "c1*");
}

Fraction c0_star_exact(const ConfusionCounts& k) {
  check(k);
  return ratio(Fraction(k.d - k.b), Fraction(std::max(k.d, k.b)), "c0*");
}

MeasurePair<double> b_star(const ConfusionCounts& k) { return {b1_star_exact(k).value(), b0_star_exact(k).value()}; }
MeasurePair<double> f_measure(const ConfusionCounts& k) { return {f1_exact(k).value(), f0_exact(k).value()}; }
MeasurePair<double> c_star(const ConfusionCounts& k) { return {c1_star_exact(k).value(), c0_star_exact(k).value()}; }

double lr_plus(const ConfusionCounts& k) {
  check(k);
  return likelihood_ratio(k.a, k.a + k.b, k.c, k.c + k.d, "LR+");
}

double lr_minus(const ConfusionCounts& k) {
  check(k);
  return likelihood_ratio(k.d, k.c + k.d, k.b, k.a + k.b, "LR-");
}

double correct_rate(double c_star) {
  if (!(c_star >= 0.0 && c_star <= 1.0))
    throw Error(ErrorKind::domain, "correct rate needs c* in [0,1]; apply consequence symmetry to negative values");
  return 1.0 / (2.0 - c_star);
}

Fraction correct_rate(const Fraction& c_star) {
  if (c_star < Fraction(0) || c_star > Fraction(1))
    throw Error(ErrorKind::domain, "correct rate needs c* in [0,1]; apply consequence symmetry to negative values");
  return Fraction(1) / (Fraction(2) - c_star);
}

ConfirmationReport confirm(const ConfusionCounts& k) {
  check(k);
  ConfirmationReport r;
  r.lr_plus = maybe([&] { return lr_plus(k); });
  r.lr_minus = maybe([&] { return lr_minus(k); });
  r.f1 = maybe([&] { return f1_exact(k).value(); });
  r.f0 = maybe([&] { return f0_exact(k).value(); });
  r.b1_star = maybe([&] { return b1_star_exact(k).value(); });
  r.b0_star = maybe([&] { return b0_star_exact(k).value(); });
  const auto c1 = maybe([&] { return c1_star_exact(k); });
  const auto c0 = maybe([&] { return c0_star_exact(k); });
  if (c1) {
    r.c1_star = c1->value();
    if (*c1 >= Fraction(0)) r.cr1 = correct_rate(*c1).value();
  }
  if (c0) {
    r.c0_star = c0->value();
    if (*c0 >= Fraction(0)) r.cr0 = correct_rate(*c0).value();
  }
  return r;
}

SymmetryReport symmetry_check(const ConfusionCounts& k) {
  const ConfusionCounts s = k.swapped_consequent();
  const Fraction b1s = b1_star_exact(s);
  const Fraction c1s = c1_star_exact(s);
  return {abs(b1s + b1_star_exact(k)).value(), abs(b0_star_exact(s) + b0_star_exact(k)).value(),
          abs(c1s + c1_star_exact(k)).value(), abs(c0_star_exact(s) + c0_star_exact(k)).value(),
          b1s.value(), c1s.value()};
}

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::f: return "F";
    case Measure::b_star: return "b*";
    case Measure::c_star: return "c*";
    case Measure::lr_plus: return "LR+";
  }
  return "?";
}

std::vector<Sensitivity> raven_sensitivity(const ConfusionCounts& k, const std::set<Measure>& measures) {
  check(k);
  ConfusionCounts more_a = k;
  ++more_a.a;
  ConfusionCounts more_d = k;
  ++more_d.d;
  std::vector<Sensitivity> out;
  for (Measure m : measures) {
    double da = 0.0;
    double dd = 0.0;
    if (m == Measure::lr_plus) {
      const double base = lr_plus(k);
      da = lr_plus(more_a) - base;
      dd = lr_plus(more_d) - base;
      if (!std::isfinite(da) || !std::isfinite(dd))
        throw Error(ErrorKind::undefined_measure, "LR+ is infinite at these counts; differences are undefined");
    } else {
      auto f = [m](const ConfusionCounts& c) {
        return m == Measure::f ? f1_exact(c) : m == Measure::b_star ? b1_star_exact(c) : c1_star_exact(c);
      };
      const Fraction base = f(k);
      da = (f(more_a) - base).value();
      dd = (f(more_d) - base).value();
    }
    out.push_back({m, da, dd, da > dd});
  }
  return out;
}

}  // namespace ptprob
