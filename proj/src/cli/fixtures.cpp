#include <cmath>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ptprob/cli.hpp"
#include "ptprob/confirmation.hpp"
#include "ptprob/io.hpp"
#include "ptprob/rate_thermo.hpp"
#include "ptprob/reasoning.hpp"
#include "ptprob/sem_info.hpp"
#include "ptprob/semantic.hpp"

namespace ptprob::cli {

namespace {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

std::string n(double v) { return io::format_number(v); }

// 10,000 people over ages 0..99: 3,000 under 18, 7,000 aged 18+, of whom
// 1,000 are called "adult".
void adult_door_count(Reporter& r) {
  std::vector<Fraction> prior, truth, tpf;
  for (int age = 0; age < 100; ++age) {
    std::int64_t people = 0, called = 0;
    if (age < 18) {
      people = 166 + (age < 12 ? 1 : 0);
    } else {
      const int k = age - 18;
      people = 85 + (k < 30 ? 1 : 0);
      called = 12 + (k < 16 ? 1 : 0);
    }
    prior.emplace_back(people, 10000);
    truth.emplace_back(age >= 18 ? 1 : 0);
    tpf.emplace_back(called, people);
  }
  const Fraction lp = logical_probability(truth, prior);
  const Fraction py = label_probability(prior, tpf);
  r.check("door count: logical probability of 'adult'", lp == Fraction(7, 10), "T=" + lp.str());
  r.check("door count: selected probability of 'adult'", py == Fraction(1, 10), "P=" + py.str());
}

void fuzzy_label_info(Reporter& r) {
  const Universe u = Universe::from_ids({"x1", "x2", "x3"});
  const Distribution prior(u, {0.15, 0.25, 0.6});
  const TruthFunction t = TruthFunction::tabulated(u, {1.0, 0.8, 0.0});
  const double lp = logical_probability(t, prior);
  const double info = semantic_info_point(t, prior, 1);
  r.check("fuzzy label: logical probability", std::abs(lp - 0.35) < 1e-12, "T(theta)=" + n(lp));
  r.check("fuzzy label: point information", std::abs(info - 1.1926) < 1e-4, "I=" + n(info) + " bits");
  r.check("fuzzy label: falsified point", semantic_info_point(t, prior, 2) == -kInf, "I(x3)=-inf");
}

void raven(Reporter& r) {
  const ConfusionCounts k{6, 2, 1, 11};
  const Fraction c1 = c1_star_exact(k);
  r.check("raven c1* at a=6, c=1", c1 == Fraction(5, 6), "c1*=" + c1.str());
  const Fraction cr = correct_rate(c1);
  r.check("raven correct rate", cr == Fraction(6, 7), "CR=" + cr.str());
  const Distribution h = syllogism_prediction(c1.value());
  r.check("raven prediction syllogism", std::abs(h[0] - 6.0 / 7.0) < 1e-12 && std::abs(h[1] - 1.0 / 7.0) < 1e-12,
          "P(h1)=" + n(h[0]) + " P(h0)=" + n(h[1]));
  const ConfusionCounts s{20, 10, 10, 20};
  bool other_fails = false;
  bool c_ok = false;
  for (const auto& row : raven_sensitivity(s)) {
    if (row.measure == Measure::c_star) c_ok = row.delta_d == 0.0 && row.a_exceeds_d;
    else if (!row.a_exceeds_d) other_fails = true;
  }
  r.check("raven sensitivity at (20,10,10,20)", c_ok && other_fails, "only c* ignores d");
}

void implication(Reporter& r) {
  const auto b = implication_bound(Fraction::parse("0.1"), Fraction::parse("0.02"));
  r.check("implication bound", b.q_given_p == Fraction(1, 5) && b.implication == Fraction(23, 25) && b.holds,
          "P(q|p)=" + b.q_given_p.str() + " P(p=>q)=" + b.implication.str());
}

void bayes_three(Reporter& r, const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng() % 20;
    std::vector<std::string> ids;
    std::vector<double> p(m), t(m);
    for (std::size_t i = 0; i < m; ++i) {
      ids.push_back("x" + std::to_string(i));
      p[i] = unit(rng);
      t[i] = unit(rng);
    }
    const Universe u = Universe::from_ids(ids);
    const Distribution prior(u, p, true);
    const TruthFunction truth = TruthFunction::tabulated(u, t);
    const TruthFromLikelihood back = truth_from_likelihood(semantic_bayes_predict(truth, prior), prior);
    const double scale = truth.max_value();
    for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, std::abs(back.truth[i] - truth[i] / scale));
  }
  r.check("Bayes III round trip (seed " + std::to_string(config.seed) + ")", worst <= config.tolerance,
          "max error=" + n(worst));
}

void boltzmann_two_state(Reporter& r) {
  const std::vector<double> e{0.0, 1.0}, g{1.0, 1.0};
  const Distribution d = boltzmann(e, g, 1.0);
  r.check("two-state Boltzmann", std::abs(d[0] - 0.7311) < 1e-4 && std::abs(d[1] - 0.2689) < 1e-4,
          "P=(" + n(d[0]) + ", " + n(d[1]) + ")");
}

void measures(Reporter& r) {
  const ConfusionCounts k{20, 10, 10, 20};
  r.check("b1* at (20,10,10,20)", b1_star_exact(k) == Fraction(1, 2), "b1*=" + b1_star_exact(k).str());
  r.check("F at (20,10,10,20)", f1_exact(k) == Fraction(1, 3), "F=" + f1_exact(k).str());
}

}  // namespace

int run_reference_fixtures(const RunConfig& config, std::ostream& out) {
  Reporter r(out);
  adult_door_count(r);
  fuzzy_label_info(r);
  raven(r);
  implication(r);
  bayes_three(r, config);
  boltzmann_two_state(r);
  measures(r);
  out << (r.failures() == 0 ? "all fixtures passed" : std::to_string(r.failures()) + " fixture(s) failed") << '\n';
  return r.failures() == 0 ? kExitOk : kExitNumerical;
}

}  // namespace ptprob::cli
