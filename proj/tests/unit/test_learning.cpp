#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ptprob/error.hpp"
#include "ptprob/learning.hpp"
#include "ptprob/prob_core.hpp"
#include "ptprob/semantic.hpp"

using namespace ptprob;

namespace {

Universe xs(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i + 1));
  return Universe::from_ids(ids);
}

LabeledSample sample_of(std::initializer_list<std::pair<const char*, const char*>> rows) {
  LabeledSample s;
  for (const auto& [x, y] : rows) s.examples.push_back({x, y});
  return s;
}

Universe ages() { return Universe::grid(0.0, 99.0, 100); }

// more young people than old ones
Distribution age_prior() {
  std::vector<double> m;
  for (int a = 0; a < 100; ++a) m.push_back(a < 60 ? 1.5 : 1.0 - 0.008 * (a - 60));
  return Distribution(ages(), m, true);
}

}  // namespace

TEST(Empirical, HandCounts) {
  const auto m = empirical_distributions(sample_of({{"x1", "a"}, {"x1", "a"}, {"x2", "b"}}));
  EXPECT_NEAR(m.prior[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.prior[1], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(m.label_prior[0], 2.0 / 3.0, 1e-15);
  EXPECT_EQ(m.posteriors[0][0], 1.0);
  EXPECT_EQ(m.posteriors[0][1], 0.0);
  EXPECT_EQ(m.channel.value(0, 0), 1.0);
  EXPECT_EQ(m.channel.value(1, 1), 1.0);
}

TEST(Empirical, SingleExample) {
  const auto m = empirical_distributions(sample_of({{"7", "y"}}));
  EXPECT_EQ(m.prior[0], 1.0);
  EXPECT_EQ(m.label_prior[0], 1.0);
  EXPECT_EQ(m.posteriors[0][0], 1.0);
}

TEST(Empirical, PartitionGivesIndicators) {
  const auto m = empirical_distributions(
      sample_of({{"1", "lo"}, {"2", "lo"}, {"3", "hi"}, {"4", "hi"}, {"1", "lo"}, {"3", "hi"}}));
  const double want[2][4] = {{1, 1, 0, 0}, {0, 0, 1, 1}};
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(m.channel.value(j, i), want[j][i]);
}

TEST(Empirical, NumericIdsAreSorted) {
  const Universe u = sample_universe(sample_of({{"10", "a"}, {"2", "a"}, {"3.5", "b"}}));
  EXPECT_EQ(u.ids(), (std::vector<std::string>{"2", "3.5", "10"}));
  EXPECT_EQ(u.scalar(2), 10.0);
}

TEST(Empirical, UnseenPointsAndUnusedLabels) {
  const Universe u = Universe::from_ids({"p", "q", "r"});
  const auto m = empirical_distributions(sample_of({{"p", "a"}, {"q", "b"}}), u);
  EXPECT_FALSE(m.channel.defined(2));
  try {
    empirical_distributions(sample_of({{"p", "a"}}), u, std::vector<std::string>{"a", "b"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unused_label);
  }
}

TEST(MatchTruth, NormalizedRowUnchanged) {
  const Universe u = xs(3);
  const ShannonChannel ch(u, {"a", "b"}, {{1.0, 0.5, 0.2}, {0.0, 0.5, 0.8}});
  const auto sc = match_truth_functions(ch);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(sc[0][i], ch.value(0, i));
  EXPECT_EQ(sc[1][2], 1.0);
}

TEST(MatchTruth, UnusedLabel) {
  const Universe u = xs(2);
  const ShannonChannel ch(u, {"a", "b"}, {{1.0, 1.0}, {0.0, 0.0}});
  try {
    match_truth_functions(ch);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unused_label);
  }
}

TEST(MatchTruth, PredictionsEqualBayesAndMassBelowBelief) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Universe u = xs(2 + trial % 12);
    const std::size_t n = 2 + trial % 4;
    std::vector<std::vector<double>> rows(n, std::vector<double>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto col = oracle::random_simplex(rng, n, 0.01);
      for (std::size_t j = 0; j < n; ++j) rows[j][i] = col[j];
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("y" + std::to_string(j));
    const ShannonChannel ch(u, names, rows);
    const Distribution prior(u, oracle::random_simplex(rng, u.size(), 0.01));
    const auto sc = match_truth_functions(ch);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(sc[j].max_value(), 1.0);
      const auto bayes = bayes_posterior(prior, ch.row(j));
      const Distribution sem = semantic_bayes_predict(sc[j], prior);
      for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(sem[i], bayes.posterior[i], 1e-12);
      EXPECT_LE(bayes.label_prob, logical_probability(sc[j], prior) + 1e-15);
    }
  }
}

TEST(TruthFromSampling, PriorGivesTautology) {
  const Distribution p(xs(3), {0.2, 0.3, 0.5});
  const TruthFunction t = truth_from_sampling(p, p);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(t[i], 1.0, 1e-15);
}

TEST(TruthFromSampling, AgreesWithMatchingOnOneSample) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> x(0, 9), y(0, 2);
  LabeledSample s;
  for (int k = 0; k < 400; ++k) s.examples.push_back({std::to_string(x(rng)), "y" + std::to_string(y(rng))});
  const auto m = empirical_distributions(s);
  const auto sc = match_truth_functions(m.channel);
  for (std::size_t j = 0; j < sc.size(); ++j) {
    const TruthFunction t = truth_from_sampling(m.posteriors[j], m.prior);
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(t[i], sc[j][i], 1e-12);
  }
}

TEST(TruthFromSampling, CrispAdultPosterior) {
  const Distribution prior = age_prior();
  std::vector<double> post(100, 0.0);
  for (int a = 18; a < 100; ++a) post[a] = prior[a];
  const TruthFunction t = truth_from_sampling(Distribution(ages(), post, true), prior);
  for (int a = 0; a < 100; ++a) EXPECT_NEAR(t[a], a >= 18 ? 1.0 : 0.0, 1e-12);
}

TEST(Fit, RecoversLogisticParameters) {
  const Distribution prior = age_prior();
  const Distribution sampling = semantic_bayes_predict(TruthFunction::logistic(ages(), 0.5, 65.0), prior);
  FitOptions o;
  o.family = Family::logistic;
  o.bounds = {ParamBounds{0.01, 3.0}, ParamBounds{0.0, 99.0}};
  for (bool gradient : {false, true}) {
    o.gradient_ascent = gradient;
    const FitResult r = fit_parametric_truth(sampling, prior, o);
    EXPECT_NEAR(r.params[0], 0.5, 0.02 * 0.5) << "gradient=" << gradient;
    EXPECT_NEAR(r.params[1], 65.0, 0.02 * 65.0) << "gradient=" << gradient;
    EXPECT_FALSE(r.prior_assumed_uniform);
    for (std::size_t k = 1; k < r.trace.size(); ++k) EXPECT_GE(r.trace[k], r.trace[k - 1]);
    EXPECT_LE(r.objective_bits, kl_divergence(sampling, prior) + 1e-9);
  }
}

TEST(Fit, RecoversGaussianParameters) {
  const Universe u = Universe::grid(0.0, 50.0, 101);
  const Distribution prior = Distribution::uniform(u);
  const Distribution sampling = semantic_bayes_predict(TruthFunction::gaussian(u, 21.0, 4.0), prior);
  FitOptions o;
  o.family = Family::gaussian;
  o.bounds = {ParamBounds{0.0, 50.0}, ParamBounds{0.25, 50.0}};
  const FitResult r = fit_parametric_truth(sampling, prior, o);
  EXPECT_NEAR(r.params[0], 21.0, 0.02 * 21.0);
  EXPECT_NEAR(r.params[1], 4.0, 0.02 * 4.0);
}

TEST(Fit, BeatsEveryCoarseGridPoint) {
  const Distribution prior = age_prior();
  const Distribution sampling = semantic_bayes_predict(TruthFunction::logistic(ages(), 0.2, 40.0), prior);
  FitOptions o;
  o.bounds = {ParamBounds{0.01, 1.0}, ParamBounds{0.0, 99.0}};
  const FitResult r = fit_parametric_truth(sampling, prior, o);
  for (std::size_t a = 0; a < o.grid; ++a)
    for (std::size_t b = 0; b < o.grid; ++b) {
      const double p0 = 0.01 + (1.0 - 0.01) * double(a) / double(o.grid - 1);
      const double p1 = 99.0 * double(b) / double(o.grid - 1);
      EXPECT_GE(r.objective_bits, fit_objective(Family::logistic, {p0, p1}, sampling, prior) - 1e-12);
    }
}

TEST(Fit, SinglePointSamplingIsFlagged) {
  // grid spacing comparable to the smallest sigma, so the centre is pinned
  const Universe u = Universe::grid(0.0, 10.0, 101);
  FitOptions o;
  o.family = Family::gaussian;
  o.bounds = {ParamBounds{0.0, 10.0}, ParamBounds{0.1, 10.0}};
  const FitResult r = fit_parametric_truth(Distribution::point_mass(u, 40), std::nullopt, o);
  EXPECT_TRUE(r.unbounded_precision);
  EXPECT_TRUE(r.prior_assumed_uniform);
  EXPECT_TRUE(r.at_bound[1]);
  EXPECT_NEAR(r.params[0], 4.0, 1e-6);
  EXPECT_NEAR(r.params[1], 0.1, 1e-9);
}

TEST(Fit, GradientMatchesCentralDifferences) {
  const Distribution prior = age_prior();
  const Distribution sampling = semantic_bayes_predict(TruthFunction::logistic(ages(), 0.3, 60.0), prior);
  const Universe g = Universe::grid(0.0, 40.0, 81);
  const Distribution gprior = Distribution::uniform(g);
  const Distribution gsampling = semantic_bayes_predict(TruthFunction::gaussian(g, 18.0, 5.0), gprior);

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> slope(0.05, 1.0), threshold(20.0, 90.0), centre(5.0, 35.0), sigma(1.0, 15.0);
  for (int k = 0; k < 10; ++k) {
    const std::array<double, 2> lp{slope(rng), threshold(rng)};
    const std::array<double, 2> gp{centre(rng), sigma(rng)};
    const auto lg = fit_objective_gradient(Family::logistic, lp, sampling, prior);
    const auto gg = fit_objective_gradient(Family::gaussian, gp, gsampling, gprior);
    for (std::size_t a = 0; a < 2; ++a) {
      const auto fl = [&](oracle::Vec v) { return fit_objective(Family::logistic, {v[0], v[1]}, sampling, prior); };
      const auto fg = [&](oracle::Vec v) { return fit_objective(Family::gaussian, {v[0], v[1]}, gsampling, gprior); };
      const double dl = oracle::central_difference(fl, {lp[0], lp[1]}, a, 1e-5);
      const double dg = oracle::central_difference(fg, {gp[0], gp[1]}, a, 1e-5);
      EXPECT_LE(std::abs(lg[a] - dl), 1e-4 * std::abs(dl)) << "logistic axis " << a;
      EXPECT_LE(std::abs(gg[a] - dg), 1e-4 * std::abs(dg)) << "gaussian axis " << a;
    }
  }
}

TEST(Classify, PartitionAndTies) {
  const Universe u = xs(4);
  const Distribution prior = Distribution::uniform(u);
  const SemanticChannel part({"a", "b"}, {TruthFunction::crisp(u, {true, true, false, false}),
                                          TruthFunction::crisp(u, {false, false, true, true})});
  EXPECT_EQ(classify(part, prior, 0), 0u);
  EXPECT_EQ(classify(part, prior, 3), 1u);
  const TruthFunction t = TruthFunction::tabulated(u, {0.2, 0.5, 1.0, 0.7});
  const SemanticChannel twins({"a", "b"}, {t, t});
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(classify(twins, prior, i), 0u);
}

TEST(Classify, Errors) {
  const Universe u = xs(3);
  const Distribution prior = Distribution::uniform(u);
  const SemanticChannel sc({"a", "b"}, {TruthFunction::crisp(u, {true, false, false}),
                                        TruthFunction::crisp(u, {false, true, false})});
  try {
    classify(sc, prior, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unclassifiable);
  }
}

TEST(Classify, ScalingOneTruthChangesNothing) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Universe u = xs(6);
    const Distribution prior(u, oracle::random_simplex(rng, 6, 0.01));
    std::vector<TruthFunction> ts, scaled;
    for (int j = 0; j < 3; ++j) {
      const auto v = oracle::random_unit(rng, 6, 0.01, 1.0);
      ts.push_back(TruthFunction::tabulated(u, v));
      auto w = v;
      if (j == 1)
        for (auto& x : w) x *= 0.37;
      scaled.push_back(TruthFunction::tabulated(u, w));
    }
    const SemanticChannel a({"a", "b", "c"}, ts), b({"a", "b", "c"}, scaled);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(classify(a, prior, i), classify(b, prior, i));
  }
}

TEST(Classify, RareClassBoundaryMovesDown) {
  const Universe u = ages();
  const TruthFunction elder = TruthFunction::logistic(u, 0.4, 60.0);
  std::vector<double> rest;
  for (std::size_t i = 0; i < 100; ++i) rest.push_back(1.0 - elder[i]);
  const SemanticChannel sc({"non-elder", "elder"}, {TruthFunction::tabulated(u, rest), elder});

  std::vector<double> m;
  for (int a = 0; a < 100; ++a) m.push_back(a < 50 ? 1.0 : std::exp(-0.08 * (a - 50)));
  const Distribution prior(u, m, true);

  // brute force: the first age each criterion calls "elder"
  int by_truth = -1, by_info = -1, by_library = -1;
  double t_elder = 0.0, t_rest = 0.0;
  for (int a = 0; a < 100; ++a) {
    t_elder += prior[a] * elder[a];
    t_rest += prior[a] * rest[a];
  }
  for (int a = 0; a < 100; ++a) {
    if (by_truth < 0 && elder[a] > rest[a]) by_truth = a;
    if (by_info < 0 && elder[a] / t_elder > rest[a] / t_rest) by_info = a;
    if (by_library < 0 && classify(sc, prior, a) == 1) by_library = a;
  }
  ASSERT_GE(by_truth, 0);
  EXPECT_EQ(by_library, by_info);
  EXPECT_LT(by_library, by_truth);
  for (int a = by_library; a < 100; ++a) EXPECT_EQ(classify(sc, prior, a), 1u) << "age " << a;
}

TEST(RandomSet, AllAndNone) {
  const std::vector<std::set<std::string>> sets{{"a", "b"}, {"a"}, {"a", "c"}};
  EXPECT_EQ(random_set_membership(sets, "a"), 1.0);
  EXPECT_EQ(random_set_membership(sets, "z"), 0.0);
  EXPECT_NEAR(random_set_membership(sets, "b"), 1.0 / 3.0, 1e-15);
}

TEST(RandomSet, RowDecompositionMatchesMatchedTruth) {
  // 10 people at each of 9 ages; count[i] of them are called y
  const int count[9] = {0, 1, 3, 6, 8, 7, 4, 2, 1};
  const Universe u = Universe::grid(20.0, 28.0, 9);
  std::vector<double> yes, no;
  for (int c : count) {
    yes.push_back(c / 10.0);
    no.push_back(1.0 - c / 10.0);
  }
  const ShannonChannel ch(u, {"y", "other"}, {yes, no});
  const auto sc = match_truth_functions(ch);

  // stack the y examples at each age into rows; row k holds every age with
  // more than k examples
  const int rows = *std::max_element(std::begin(count), std::end(count));
  std::vector<std::set<std::string>> sets;
  for (int k = 0; k < rows; ++k) {
    std::set<std::string> row;
    for (int i = 0; i < 9; ++i)
      if (count[i] > k) row.insert(u[i].id);
    sets.push_back(row);
  }
  for (int i = 0; i < 9; ++i) EXPECT_DOUBLE_EQ(random_set_membership(sets, u[i].id), sc[0][i]) << "age " << u[i].id;
}
