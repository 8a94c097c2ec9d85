#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ptprob/error.hpp"
#include "ptprob/prob_core.hpp"
#include "ptprob/rate_thermo.hpp"
#include "ptprob/semantic.hpp"

using namespace ptprob;

namespace {

Universe xs(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i + 1));
  return Universe::from_ids(ids);
}

// Thermodynamic quantities straight from the definitions, in nats.
struct ThermoOracle {
  double r_theta;
  double entropy;
};

ThermoOracle thermo_oracle(const ThermoSystem& sys) {
  double n_total = 0.0;
  for (const auto& a : sys.areas) n_total += a.particles;
  double r = 0.0, s = 0.0;
  for (const auto& a : sys.areas) {
    const double kt = sys.k * a.temperature;
    double g = 0.0, z = 0.0;
    for (std::size_t i = 0; i < a.energies.size(); ++i) {
      g += a.multiplicities[i];
      z += a.multiplicities[i] * std::exp(-a.energies[i] / kt);
    }
    double mean_e = 0.0, kl = 0.0;
    for (std::size_t i = 0; i < a.energies.size(); ++i) {
      const double p = a.multiplicities[i] * std::exp(-a.energies[i] / kt) / z;
      mean_e += p * a.energies[i];
      if (p > 0.0) kl += p * std::log(p / (a.multiplicities[i] / g));
    }
    r += a.particles / n_total * kl;
    s += a.particles * mean_e / a.temperature + sys.k * a.particles * std::log(z);
  }
  return {r, s};
}

ThermoSystem random_system(std::mt19937_64& rng, std::size_t areas, std::size_t states) {
  std::uniform_real_distribution<double> t(0.3, 5.0), n(1.0, 500.0), e(0.0, 4.0), g(1.0, 10.0);
  std::vector<double> mult(states);
  for (auto& m : mult) m = std::round(g(rng));
  ThermoSystem sys;
  sys.k = 1.0;
  for (std::size_t a = 0; a < areas; ++a) {
    ThermoArea area;
    area.temperature = t(rng);
    area.particles = std::round(n(rng));
    for (std::size_t i = 0; i < states; ++i) area.energies.push_back(e(rng));
    // same total G everywhere, shuffled across states
    area.multiplicities = mult;
    std::shuffle(area.multiplicities.begin(), area.multiplicities.end(), rng);
    sys.areas.push_back(area);
  }
  return sys;
}

}  // namespace

TEST(RateDistortion, ZeroSlopeIsIndependence) {
  const Universe u = xs(3);
  const Distribution prior(u, {0.5, 0.3, 0.2});
  const DistortionMatrix d({"y1", "y2"}, {{0, 1}, {1, 0}, {2, 1}});
  const RdPoint p = rd_point(prior, d, 0.0);
  EXPECT_NEAR(p.R, 0.0, 1e-12);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(p.channel.value(j, i), p.reproduction_prior[j], 1e-12);
  double dist = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) dist += prior[i] * p.reproduction_prior[j] * d(i, j);
  EXPECT_NEAR(p.D, dist, 1e-12);
  EXPECT_NEAR(r_theta_from_rd(p, prior, d), 0.0, 1e-12);
}

TEST(RateDistortion, BinaryHammingClosedForm) {
  const Universe u = Universe::from_ids({"0", "1"});
  const Distribution prior = Distribution::uniform(u);
  const DistortionMatrix d = DistortionMatrix::hamming(u);
  for (double s : {-0.5, -1.0, -2.0, -4.0}) {
    const RdPoint p = rd_point(prior, d, s);
    EXPECT_NEAR(p.R, oracle::binary_hamming_rate(p.D), 1e-6) << "s=" << s;
    EXPECT_NEAR(p.D, 1.0 / (1.0 + std::exp(-s)), 1e-9) << "s=" << s;
  }
  const RdPoint p = rd_point(prior, d, -2.0);
  EXPECT_NEAR(r_theta_from_rd(p, prior, d), p.R, 1e-9);
}

TEST(RateDistortion, ChannelHasParametricForm) {
  const Universe u = xs(3);
  const Distribution prior(u, {0.2, 0.45, 0.35});
  const DistortionMatrix d({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 3}, {2, 1, 0}});
  const double s = -1.3;
  const RdPoint p = rd_point(prior, d, s);
  for (std::size_t i = 0; i < 3; ++i) {
    double lambda = 0.0;
    for (std::size_t j = 0; j < 3; ++j) lambda += p.reproduction_prior[j] * std::exp(s * d(i, j));
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_NEAR(p.channel.value(j, i), p.reproduction_prior[j] * std::exp(s * d(i, j)) / lambda, 1e-12);
  }
  oracle::Mat rows;
  for (std::size_t j = 0; j < 3; ++j) rows.emplace_back(p.channel.row(j).begin(), p.channel.row(j).end());
  EXPECT_NEAR(p.R, oracle::mutual_info_bits({0.2, 0.45, 0.35}, rows), 1e-9);
}

TEST(RateDistortion, RandomThreeByThreeAgainstBruteForce) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  const auto px = oracle::random_simplex(rng, 3, 0.2);
  oracle::Mat dm(3, oracle::Vec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dm[i][j] = i == j ? 0.0 : dist(rng);
  const Distribution prior(xs(3), px);
  const DistortionMatrix d({"y1", "y2", "y3"}, dm);
  const RdPoint p = rd_point(prior, d, -1.0);
  const double brute = oracle::brute_force_rd_3x3(px, dm, p.D);
  EXPECT_GE(brute, p.R - 1e-9);
  EXPECT_LE(brute, p.R + 1e-3);
  EXPECT_NEAR(r_theta_from_rd(p, prior, d), p.R, 1e-9);
}

TEST(RateDistortion, ZeroRateRegionConverges) {
  // y1 is the cheapest single reproduction; for small |s| the optimum puts all
  // mass on it and R = 0
  const Distribution prior(xs(3), {0.6, 0.3, 0.1});
  const DistortionMatrix d({"y1", "y2", "y3"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  for (double s : {-1e-4, -1e-2, -0.2}) {
    const RdPoint p = rd_point(prior, d, s);
    EXPECT_NEAR(p.R, 0.0, 1e-12) << s;
    EXPECT_NEAR(p.D, 0.3 + 0.2, 1e-12) << s;
    EXPECT_EQ(p.reproduction_prior[0], 1.0) << s;
    EXPECT_EQ(p.pruned_labels, (std::vector<std::string>{"y2", "y3"})) << s;
    // the certificate: no other label has multiplier above 1
    for (std::size_t j = 1; j < 3; ++j) {
      double c = 0.0;
      for (std::size_t i = 0; i < 3; ++i) c += prior[i] * std::exp(s * (d(i, j) - d(i, 0)));
      EXPECT_LE(c, 1.0) << s;
    }
  }
}

TEST(RateDistortion, CurveIsMonotoneAndConvex) {
  std::mt19937_64 rng(99);
  const Universe u = xs(4);
  const Distribution prior(u, oracle::random_simplex(rng, 4, 0.1));
  std::vector<std::vector<double>> dm(4, std::vector<double>(4));
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) dm[i][j] = i == j ? 0.0 : dist(rng);
  const DistortionMatrix d({"a", "b", "c", "e"}, dm);
  std::vector<double> grid;
  for (double s = 0.0; s >= -6.0; s -= 0.25) grid.push_back(s);
  const auto curve = rd_curve(prior, d, grid);
  ASSERT_EQ(curve.size(), grid.size());
  for (std::size_t k = 0; k < curve.size(); ++k) {
    EXPECT_GE(curve[k].R, -1e-12);
    EXPECT_NEAR(r_theta_from_rd(curve[k], prior, d), curve[k].R, 1e-9);
    if (k > 0) {
      EXPECT_LE(curve[k].D, curve[k - 1].D + 1e-12);
      EXPECT_GE(curve[k].R, curve[k - 1].R - 1e-12);
    }
    if (k > 0 && k + 1 < curve.size()) {
      const auto &a = curve[k - 1], &b = curve[k], &c = curve[k + 1];
      if (a.D - c.D > 1e-9) {
        const double chord = a.R + (c.R - a.R) * (b.D - a.D) / (c.D - a.D);
        EXPECT_LE(b.R, chord + 1e-6);
      }
    }
  }
}

TEST(RateDistortion, SingleZeroSlope) {
  const Universe u = Universe::from_ids({"0", "1"});
  const std::vector<double> grid{0.0};
  const auto curve = rd_curve(Distribution::uniform(u), DistortionMatrix::hamming(u), grid);
  ASSERT_EQ(curve.size(), 1u);
  EXPECT_NEAR(curve[0].D, 0.5, 1e-12);
  EXPECT_NEAR(curve[0].R, 0.0, 1e-12);
}

TEST(RateDistortion, InputChecks) {
  const Universe u = Universe::from_ids({"0", "1"});
  const Distribution prior = Distribution::uniform(u);
  EXPECT_THROW(rd_point(prior, DistortionMatrix::hamming(u), 0.5), Error);
  const std::vector<double> rising{-1.0, -0.5};
  EXPECT_THROW(rd_curve(prior, DistortionMatrix::hamming(u), rising), Error);
  EXPECT_THROW(DistortionMatrix({"a"}, {{-1.0}}), Error);
  EXPECT_THROW(rd_point(prior, DistortionMatrix({"a"}, {{0.0}}), -1.0), Error);
}

TEST(DcfMinimum, CrispCoverage) {
  const Universe u = xs(4);
  const Distribution prior(u, {0.1, 0.2, 0.3, 0.4});
  const SemanticChannel dcfs({"a", "b"}, {TruthFunction::crisp(u, {true, true, false, false}),
                                          TruthFunction::crisp(u, {false, true, true, true})});
  const Distribution lp(Universe::from_ids({"a", "b"}), {0.25, 0.75});
  const auto m = dcf_minimum_info(dcfs, prior, lp);
  EXPECT_NEAR(m.per_label_info[0], -std::log2(0.3), 1e-12);
  EXPECT_NEAR(m.per_label_info[1], -std::log2(0.9), 1e-12);
  EXPECT_NEAR(m.min_info, -0.25 * std::log2(0.3) - 0.75 * std::log2(0.9), 1e-12);
}

TEST(DcfMinimum, TautologiesCostNothing) {
  const Universe u = xs(3);
  const SemanticChannel dcfs({"a", "b"}, {TruthFunction::tautology(u), TruthFunction::tautology(u)});
  const auto m = dcf_minimum_info(dcfs, Distribution(u, {0.2, 0.3, 0.5}),
                                  Distribution(Universe::from_ids({"a", "b"}), {0.5, 0.5}));
  EXPECT_NEAR(m.min_info, 0.0, 1e-15);
}

TEST(DcfMinimum, MinimalOverFeasibleMesh) {
  // Feasible posteriors q keep q_i <= P(x_i) T(x_i) / T(θ) wherever T(x_i) < 1.
  const Universe u = xs(4);
  const Distribution prior(u, {0.4, 0.3, 0.2, 0.1});
  const std::vector<std::vector<double>> truths{{1.0, 0.6, 0.3, 0.1}, {0.2, 1.0, 1.0, 0.5}, {0.9, 0.5, 0.7, 1.0}};
  std::vector<TruthFunction> ts;
  for (const auto& t : truths) ts.push_back(TruthFunction::tabulated(u, t));
  const SemanticChannel dcfs({"a", "b", "c"}, ts);
  const auto m = dcf_minimum_info(dcfs, prior, Distribution(Universe::from_ids({"a", "b", "c"}), {0.3, 0.3, 0.4}));

  const oracle::Vec p{0.4, 0.3, 0.2, 0.1};
  const int n = 60;
  for (std::size_t j = 0; j < truths.size(); ++j) {
    double tj = 0.0;
    for (int i = 0; i < 4; ++i) tj += p[i] * truths[j][i];
    oracle::Vec cap(4);
    for (int i = 0; i < 4; ++i) cap[i] = truths[j][i] < 1.0 ? p[i] * truths[j][i] / tj : 1.0;
    oracle::Vec best(4);
    for (int i = 0; i < 4; ++i) best[i] = p[i] * truths[j][i] / tj;
    EXPECT_NEAR(m.per_label_info[j], oracle::kl_bits(best, p), 1e-12);

    std::size_t feasible = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b)
        for (int c = 0; a + b + c <= n; ++c) {
          const oracle::Vec q{double(a) / n, double(b) / n, double(c) / n, double(n - a - b - c) / n};
          bool ok = true;
          for (int i = 0; i < 4; ++i) ok = ok && q[i] <= cap[i] + 1e-12;
          if (!ok) continue;
          ++feasible;
          EXPECT_GE(oracle::kl_bits(q, p), m.per_label_info[j] - 1e-12);
        }
    EXPECT_GT(feasible, 20u) << "label " << j;
  }
}

TEST(Boltzmann, TwoStates) {
  const std::vector<double> e{0.0, 1.0}, g{1.0, 1.0};
  const Distribution d = boltzmann(e, g, 1.0);
  EXPECT_NEAR(d[0], 1.0 / (1.0 + std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(d[0], 0.7311, 1e-4);
  EXPECT_NEAR(d[1], 0.2689, 1e-4);
}

TEST(Boltzmann, FlatEnergiesAndHotLimit) {
  const std::vector<double> flat{2.0, 2.0, 2.0}, g{1.0, 3.0, 6.0}, e{0.0, 1.0, 5.0};
  const Distribution d = boltzmann(flat, g, 0.7);
  EXPECT_NEAR(d[1], 0.3, 1e-15);
  const Distribution hot = boltzmann(e, g, 1e9);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(hot[i], g[i] / 10.0, 1e-8);
  EXPECT_THROW(boltzmann(e, g, 0.0), Error);
  EXPECT_THROW(boltzmann(e, g, -1.0), Error);
}

TEST(Boltzmann, SameAsSemanticPrediction) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> en(0.0, 10.0), gm(1.0, 20.0), kt(0.2, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 8;
    std::vector<double> e(n), g(n), truth(n);
    double gsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = en(rng);
      g[i] = gm(rng);
      gsum += g[i];
    }
    const double t = kt(rng);
    const Distribution d = boltzmann(e, g, t);
    std::vector<double> prior(n);
    for (std::size_t i = 0; i < n; ++i) {
      prior[i] = g[i] / gsum;
      truth[i] = std::exp(-e[i] / t);
    }
    const Distribution p(d.universe(), prior);
    const Distribution sem = semantic_bayes_predict(TruthFunction::tabulated(d.universe(), truth), p);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(d[i], sem[i], 1e-12);
  }
}

TEST(Thermo, SingleAreaRelation) {
  ThermoSystem sys;
  sys.areas.push_back({1.5, 200.0, {0.0, 1.0, 2.5}, {2.0, 3.0, 5.0}});
  const auto r = entropy_info_relation(sys);
  const auto o = thermo_oracle(sys);
  EXPECT_LT(r.residual, 1e-9);
  EXPECT_NEAR(r.r_theta_nats, o.r_theta, 1e-12);
  EXPECT_NEAR(r.entropy, o.entropy, 1e-9);
  EXPECT_NEAR(r.r_theta_bits, o.r_theta / std::log(2.0), 1e-12);
}

TEST(Thermo, EqualTemperatureAreasMerge) {
  ThermoSystem two;
  two.areas.push_back({2.0, 120.0, {0.0, 0.5, 3.0}, {1.0, 4.0, 5.0}});
  two.areas.push_back({2.0, 80.0, {0.0, 0.5, 3.0}, {1.0, 4.0, 5.0}});
  ThermoSystem one;
  one.areas.push_back({2.0, 200.0, {0.0, 0.5, 3.0}, {1.0, 4.0, 5.0}});
  const auto a = entropy_info_relation(two), b = entropy_info_relation(one);
  EXPECT_NEAR(a.r_theta_nats, b.r_theta_nats, 1e-12);
  EXPECT_NEAR(a.entropy, b.entropy, 1e-9);
}

TEST(Thermo, ZeroEnergyIsMaximumEntropy) {
  ThermoSystem sys;
  sys.k = 1.5;
  sys.areas.push_back({1.0, 10.0, {0.0, 0.0, 0.0}, {1.0, 2.0, 3.0}});
  sys.areas.push_back({4.0, 30.0, {0.0, 0.0, 0.0}, {3.0, 2.0, 1.0}});
  const auto r = entropy_info_relation(sys);
  EXPECT_NEAR(r.entropy, 1.5 * 40.0 * std::log(6.0), 1e-9);
  EXPECT_NEAR(r.r_theta_nats, 0.0, 1e-12);
}

TEST(Thermo, GeneratedSystems) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ThermoSystem sys = random_system(rng, 1 + trial % 4, 2 + trial % 5);
    const auto r = entropy_info_relation(sys);
    const auto o = thermo_oracle(sys);
    EXPECT_LT(r.residual, 1e-9);
    EXPECT_NEAR(r.r_theta_nats, o.r_theta, 1e-10);
    EXPECT_NEAR(r.entropy, o.entropy, 1e-9 * std::max(1.0, std::abs(o.entropy)));
  }
}

TEST(Thermo, Validation) {
  ThermoSystem sys;
  sys.areas.push_back({1.0, 10.0, {0.0, 1.0}, {1.0, 2.0}});
  sys.areas.push_back({1.0, 10.0, {0.0, 1.0}, {1.0, 3.0}});
  EXPECT_THROW(validate(sys), Error);
  sys.areas[1].multiplicities = {2.0, 1.0};
  EXPECT_NO_THROW(validate(sys));
  sys.areas[0].temperature = 0.0;
  EXPECT_THROW(entropy_info_relation(sys), Error);
}
