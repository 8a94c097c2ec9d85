#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>

#include "ptprob/confirmation.hpp"
#include "ptprob/error.hpp"

using namespace ptprob;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ptprob::Error thrown";
  return ErrorKind::parse;
}

// b1* from the likelihood ratio, one branch at a time.
double b1_from_lr(double lr) { return lr >= 1.0 ? 1.0 - 1.0 / lr : lr - 1.0; }

}  // namespace

TEST(ChannelTable, HandValues) {
  const auto perfect = channel_table({1, 0, 0, 1});
  EXPECT_EQ(perfect.e1_given_h1, 1.0);
  EXPECT_EQ(perfect.e0_given_h1, 0.0);
  EXPECT_EQ(perfect.e1_given_h0, 0.0);
  EXPECT_EQ(perfect.e0_given_h0, 1.0);
  const auto raven = channel_table({6, 2, 1, 11});
  EXPECT_DOUBLE_EQ(raven.e1_given_h1, 0.75);
  EXPECT_DOUBLE_EQ(raven.e1_given_h0, 1.0 / 12.0);
  const auto flat = channel_table({1, 1, 1, 1});
  EXPECT_EQ(flat.e1_given_h1, 0.5);
  EXPECT_EQ(flat.e0_given_h0, 0.5);
  EXPECT_EQ(kind_of([] { channel_table({0, 0, 1, 1}); }), ErrorKind::count);
}

TEST(BStar, HandValues) {
  EXPECT_EQ(b1_star_exact({5, 0, 0, 7}), Fraction(1));
  EXPECT_EQ(b1_star_exact({1, 1, 1, 1}), Fraction(0));
  EXPECT_EQ(b1_star_exact({20, 10, 10, 20}), Fraction(1, 2));
  EXPECT_DOUBLE_EQ(lr_plus({20, 10, 10, 20}), 2.0);
  EXPECT_DOUBLE_EQ(b_star({20, 10, 10, 20}).first, 0.5);
  EXPECT_EQ(kind_of([] { b1_star_exact({0, 3, 0, 4}); }), ErrorKind::undefined_measure);
  EXPECT_EQ(kind_of([] { lr_plus({0, 3, 0, 4}); }), ErrorKind::undefined_measure);
  EXPECT_EQ(lr_plus({3, 1, 0, 4}), std::numeric_limits<double>::infinity());
}

TEST(FMeasure, HandValues) {
  EXPECT_EQ(f1_exact({1, 1, 1, 1}), Fraction(0));
  EXPECT_EQ(f1_exact({4, 0, 0, 9}), Fraction(1));
  EXPECT_EQ(f1_exact({20, 10, 10, 20}), Fraction(1, 3));
  EXPECT_EQ(f0_exact({20, 10, 10, 20}), Fraction(300, 900));
  EXPECT_EQ(kind_of([] { f1_exact({0, 2, 0, 0}); }), ErrorKind::undefined_measure);
}

TEST(CStar, HandValues) {
  EXPECT_EQ(c1_star_exact({6, 2, 1, 11}), Fraction(5, 6));
  EXPECT_EQ(c1_star_exact({4, 9, 4, 1}), Fraction(0));
  EXPECT_EQ(c1_star_exact({0, 9, 3, 1}), Fraction(-1));
  EXPECT_EQ(c0_star_exact({6, 2, 1, 11}), Fraction(9, 11));
  EXPECT_EQ(kind_of([] { c1_star_exact({0, 5, 0, 5}); }), ErrorKind::undefined_measure);
}

TEST(CorrectRate, HandValues) {
  EXPECT_EQ(correct_rate(Fraction(1)), Fraction(1));
  EXPECT_EQ(correct_rate(Fraction(0)), Fraction(1, 2));
  EXPECT_EQ(correct_rate(Fraction(5, 6)), Fraction(6, 7));
  EXPECT_EQ(correct_rate(Fraction(5, 6)), Fraction(6, 6 + 1));
  EXPECT_DOUBLE_EQ(correct_rate(0.5), 2.0 / 3.0);
  EXPECT_EQ(kind_of([] { correct_rate(-0.1); }), ErrorKind::domain);
}

TEST(Confirm, PartialReport) {
  const auto r = confirm({0, 0, 0, 5});
  EXPECT_FALSE(r.b1_star);
  EXPECT_FALSE(r.c1_star);
  ASSERT_TRUE(r.c0_star);
  EXPECT_EQ(*r.c0_star, 1.0);
  ASSERT_TRUE(r.cr0);
  EXPECT_EQ(*r.cr0, 1.0);
  const auto full = confirm({6, 2, 1, 11});
  ASSERT_TRUE(full.cr1);
  EXPECT_NEAR(*full.cr1, 6.0 / 7.0, 1e-15);
}

TEST(Symmetry, HandValues) {
  const auto s = symmetry_check({1, 0, 0, 1});
  EXPECT_EQ(s.b1_swapped, -1.0);
  EXPECT_EQ(s.b1_residual, 0.0);
  const auto flat = symmetry_check({1, 1, 1, 1});
  EXPECT_EQ(flat.b1_swapped, 0.0);
  EXPECT_EQ(flat.c1_swapped, 0.0);
  EXPECT_EQ(ConfusionCounts({1, 2, 3, 4}).swapped_consequent(), ConfusionCounts({3, 4, 1, 2}));
}

TEST(Raven, CStarIgnoresD) {
  for (std::int64_t a = 1; a < 8; ++a)
    for (std::int64_t c = 0; c < 8; ++c) {
      const auto rows = raven_sensitivity({a, 3, c, 5}, {Measure::c_star});
      ASSERT_EQ(rows.size(), 1u);
      EXPECT_EQ(rows[0].delta_d, 0.0);
    }
}

TEST(Raven, OnlyCStarAtBalancedCounts) {
  const auto rows = raven_sensitivity({20, 10, 10, 20});
  ASSERT_EQ(rows.size(), 4u);
  bool other_fails = false;
  for (const auto& r : rows) {
    if (r.measure == Measure::c_star) {
      EXPECT_EQ(r.delta_d, 0.0);
      EXPECT_GT(r.delta_a, 0.0);
      EXPECT_TRUE(r.a_exceeds_d);
    } else if (!r.a_exceeds_d) {
      other_fails = true;
    }
  }
  EXPECT_TRUE(other_fails);
}

TEST(Raven, CStarSlopeInA) {
  for (std::int64_t a : {10, 25, 60, 200})
    for (std::int64_t c : {0, 1, 3}) {
      const auto rows = raven_sensitivity({a, 4, c, 9}, {Measure::c_star});
      EXPECT_NEAR(rows[0].delta_a, double(c) / (double(a) * double(a + 1)), 1e-15) << a << "," << c;
    }
}

TEST(Enumeration, RangeDependenceAndSymmetry) {
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (std::int64_t c = 0; c <= 12; ++c)
        for (std::int64_t d = 0; d <= 12; ++d) {
          const ConfusionCounts k{a, b, c, d};
          const Fraction one(1);
          if (a + c > 0) {
            const Fraction c1 = c1_star_exact(k);
            EXPECT_EQ(c1, c1_star_exact({a, 0, c, 0}));
            EXPECT_LE(abs(c1), one);
            EXPECT_EQ(c1_star_exact(k.swapped_consequent()), -c1);
            if (a >= c) {
              EXPECT_EQ(correct_rate(c1), Fraction(a, a + c));
            }
          }
          if (a + b == 0 || c + d == 0) continue;
          const bool lr_defined = a + c > 0;
          if (lr_defined) {
            const Fraction b1 = b1_star_exact(k);
            const Fraction f1 = f1_exact(k);
            EXPECT_LE(abs(b1), one);
            EXPECT_LE(abs(f1), one);
            EXPECT_EQ(b1_star_exact(k.swapped_consequent()), -b1);
            EXPECT_EQ(b1 > Fraction(0), f1 > Fraction(0));
            EXPECT_EQ(b1 == Fraction(0), f1 == Fraction(0));
            const double lr = lr_plus(k);
            EXPECT_EQ(b1 == Fraction(0), lr == 1.0);
            if (std::isfinite(lr)) {
              EXPECT_NEAR(b1.value(), b1_from_lr(lr), 1e-12);
              EXPECT_NEAR(f1.value(), (lr - 1.0) / (lr + 1.0), 1e-12);
            }
            if (b + d > 0) {
              const auto s = symmetry_check(k);
              EXPECT_LT(s.b1_residual, 1e-12);
              EXPECT_LT(s.b0_residual, 1e-12);
              EXPECT_LT(s.c1_residual, 1e-12);
              EXPECT_LT(s.c0_residual, 1e-12);
            }
          }
        }
}

TEST(BStar, IncreasesWithLikelihoodRatio) {
  double last_lr = -1.0, last_b = -2.0;
  // fix b, c, d and raise a: LR+ rises, so must b1*
  for (std::int64_t a = 0; a < 40; ++a) {
    const ConfusionCounts k{a, 10, 5, 10};
    const double lr = lr_plus(k);
    const double b = b_star(k).first;
    EXPECT_GT(lr, last_lr);
    EXPECT_GT(b, last_b);
    last_lr = lr;
    last_b = b;
  }
}

TEST(BStar, BelievablePartSolvesEmpiricalPosterior) {
  // T(θe1|h1) = 1 and T(θe1|h0) = b1'. Find b1' making the semantic
  // prediction P(h1|θe1) equal the empirical P(h1|e1), by bisection.
  const ConfusionCounts cases[] = {{20, 10, 10, 20}, {6, 2, 1, 11}, {9, 1, 3, 7}, {5, 5, 1, 30}};
  for (const auto& k : cases) {
    const auto t = channel_table(k);
    for (double ph1 : {0.1, 0.35, 0.5, 0.8}) {
      const double target = t.e1_given_h1 * ph1 / (t.e1_given_h1 * ph1 + t.e1_given_h0 * (1 - ph1));
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double pred = ph1 / (ph1 + mid * (1 - ph1));
        (pred > target ? lo : hi) = mid;
      }
      const double root = 0.5 * (lo + hi);
      EXPECT_NEAR(root, t.e1_given_h0 / t.e1_given_h1, 1e-12);
      EXPECT_NEAR(1.0 - root, b_star(k).first, 1e-12);
    }
  }
}
