#pragma once

// Confirmation measures from a 2x2 table of examples.
//
//            e1   e0
//     h1      a    b
//     h0      c    d
//
// b* treats a rule e1 -> h1 as a channel (a function of the likelihood ratio),
// c* treats it as a prediction and depends only on a and c. Measures are
// evaluated in exact rational arithmetic; the double accessors round once.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ptprob/fraction.hpp"

namespace ptprob {

struct ConfusionCounts {
  std::int64_t a = 0;  // (e1, h1)
  std::int64_t b = 0;  // (e0, h1)
  std::int64_t c = 0;  // (e1, h0)
  std::int64_t d = 0;  // (e0, h0)

  // Same table with the consequent flipped (h1 <-> h0): (c, d, a, b).
  ConfusionCounts swapped_consequent() const { return {c, d, a, b}; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct ChannelTable {
  double e1_given_h1;
  double e0_given_h1;
  double e1_given_h0;
  double e0_given_h0;
};

// Throws a count error when a+b = 0 or c+d = 0.
ChannelTable channel_table(const ConfusionCounts& k);

template <typename T>
struct MeasurePair {
  T first;   // e1 -> h1
  T second;  // e0 -> h0 (b0*, c0*) or h0 -> e0 (F)
};

// Each throws undefined_measure when its denominator vanishes. The pair
// versions need both members defined; use the single versions otherwise.
Fraction b1_star_exact(const ConfusionCounts& k);
Fraction b0_star_exact(const ConfusionCounts& k);
Fraction f1_exact(const ConfusionCounts& k);   // (ad-bc)/(ad+bc+2ac)
Fraction f0_exact(const ConfusionCounts& k);   // (ad-bc)/(ad+bc+2dc)
Fraction c1_star_exact(const ConfusionCounts& k);
Fraction c0_star_exact(const ConfusionCounts& k);

MeasurePair<double> b_star(const ConfusionCounts& k);
MeasurePair<double> f_measure(const ConfusionCounts& k);
MeasurePair<double> c_star(const ConfusionCounts& k);

// LR+ = P(e1|h1)/P(e1|h0), LR- = P(e0|h0)/P(e0|h1). +inf when only the
// denominator vanishes; undefined_measure on 0/0.
double lr_plus(const ConfusionCounts& k);
double lr_minus(const ConfusionCounts& k);

// CR = 1/(2 - c*) for c* in [0,1]; a domain error otherwise.
double correct_rate(double c_star);
Fraction correct_rate(const Fraction& c_star);

struct ConfirmationReport {
  std::optional<double> lr_plus, lr_minus;
  std::optional<double> f1, f0;
  std::optional<double> b1_star, b0_star;
  std::optional<double> c1_star, c0_star;
  std::optional<double> cr1, cr0;  // only where the matching c* is nonnegative
};

// Every measure that is defined for the counts; the rest stay empty.
ConfirmationReport confirm(const ConfusionCounts& k);

struct SymmetryReport {
  // |m(e1->h0) + m(e1->h1)| with the left side computed from swapped counts.
  double b1_residual, b0_residual, c1_residual, c0_residual;
  double b1_swapped;  // b*(e1 -> h0)
  double c1_swapped;  // c*(e1 -> h0)
};

SymmetryReport symmetry_check(const ConfusionCounts& k);

enum class Measure { f, b_star, c_star, lr_plus };

const char* measure_name(Measure m);

struct Sensitivity {
  Measure measure;
  double delta_a;  // f(a+1,b,c,d) - f(a,b,c,d)
  double delta_d;  // f(a,b,c,d+1) - f(a,b,c,d)
  bool a_exceeds_d;
};

std::vector<Sensitivity> raven_sensitivity(const ConfusionCounts& k,
                                           const std::set<Measure>& measures = {Measure::f, Measure::b_star,
                                                                                Measure::c_star, Measure::lr_plus});

}  // namespace ptprob
