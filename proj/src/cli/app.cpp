#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "ptprob/error.hpp"

namespace ptprob::cli {

namespace {

void add_counts(CLI::App* cmd, CountsOptions& o) {
  cmd->add_option("--a", o.a, "#(e1,h1)");
  cmd->add_option("--b", o.b, "#(e0,h1)");
  cmd->add_option("--c", o.c, "#(e1,h0)");
  cmd->add_option("--d", o.d, "#(e0,h0)");
  cmd->add_option("--counts", o.counts, "2x2 counts CSV (rows h1,h0; columns e1,e0)");
  cmd->add_flag("--strict", o.strict, "fail when any measure is undefined");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logical and statistical probability toolkit: semantic information, confirmation, fuzzy reasoning",
               "ptprob"};
  // global options may also follow the subcommand
  app.fallthrough();
  std::optional<std::string> config_path, log_base, format;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  bool fixtures = false;
  app.add_option("--config", config_path, std::string("RunConfig JSON (default: $") + kConfigEnv + ")");
  app.add_option("--log-base", log_base, "bits or nats");
  app.add_option("--format", format, "json, tsv or table");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--tolerance", tolerance, "numeric tolerance for reported checks");
  app.add_flag("--paper-fixtures", fixtures, "run the bundled reference examples and report pass/fail");
  app.require_subcommand(0, 1);

  InfoOptions info;
  auto* c_info = app.add_subcommand("info", "semantic information of truth functions under a prior");
  c_info->add_option("--prior", info.prior, "prior Distribution JSON")->required();
  c_info->add_option("--truth", info.truth, "TruthFunction or SemanticChannel JSON")->required();
  c_info->add_option("--channel", info.channel, "ShannonChannel JSON for mutual information");
  c_info->add_option("--sampling", info.sampling, "sampling Distribution JSON for average information");

  LearnOptions learn;
  auto* c_learn = app.add_subcommand("learn", "learn truth functions from a labeled sample");
  c_learn->add_option("--sample", learn.sample, "CSV with header x_id,label")->required();
  c_learn->add_option("--family", learn.family, "matched, logistic or gaussian");
  c_learn->add_option("--bounds", learn.bounds, "parameter bounds lo1,hi1,lo2,hi2");
  c_learn->add_option("--prior", learn.prior, "prior Distribution JSON (default: empirical)");
  c_learn->add_flag("--uniform-prior", learn.uniform_prior, "treat P(x) as unknown and assume it uniform");
  c_learn->add_option("--truth-tsv", learn.truth_tsv, "also write the tabulated truths here");
  c_learn->add_option("--labels", learn.labels, "comma-separated labels to learn, in order");

  CountsOptions confirm_o;
  auto* c_confirm = app.add_subcommand("confirm", "confirmation measures from 2x2 counts");
  add_counts(c_confirm, confirm_o);
  CountsOptions raven_o;
  auto* c_raven = app.add_subcommand("raven", "sensitivity of measures to extra a and d examples");
  add_counts(c_raven, raven_o);

  RateOptions rate;
  auto* c_rate = app.add_subcommand("rate", "rate-distortion curve");
  c_rate->add_option("--prior", rate.prior, "source Distribution JSON")->required();
  c_rate->add_option("--distortion", rate.distortion, "distortion matrix JSON or CSV");
  c_rate->add_flag("--hamming", rate.hamming, "Hamming distortion over the prior's universe");
  c_rate->add_option("--s-grid", rate.s_grid, "comma-separated nonpositive slopes, descending");

  ThermoOptions thermo;
  auto* c_thermo = app.add_subcommand("thermo", "entropy-information relation of a local-equilibrium system");
  c_thermo->add_option("--system", thermo.system, "ThermoSystem JSON")->required();

  ReasonOptions reason_o;
  auto* c_reason = app.add_subcommand("reason", "evaluate reasoning rows (Bayes forms and syllogisms)");
  c_reason->add_option("--spec", reason_o.spec, "row spec JSON")->required();

  FuzzyOptions fuzzy;
  auto* c_fuzzy = app.add_subcommand("fuzzy", "truth function of a compound label");
  c_fuzzy->add_option("--atomics", fuzzy.atomics, "JSON {\"universe\", \"atomics\": {name: TruthFunction}}")->required();
  c_fuzzy->add_option("--expr", fuzzy.expr, "expression, e.g. \"NOT (u OR a)\" or \"a AND:neg NOT e\"");
  c_fuzzy->add_option("--label", fuzzy.label, "child, youth_not_adult or middle_age");
  c_fuzzy->add_option("--prior", fuzzy.prior, "prior Distribution JSON for the logical probability");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    RunConfig config;
    if (!config_path)
      if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') config_path = env;
    if (config_path) config = load_config(*config_path);
    if (log_base) config.log_base = parse_log_base(*log_base);
    if (format) config.output_format = parse_format(*format);
    if (seed) config.seed = *seed;
    if (tolerance) {
      if (!(*tolerance > 0.0)) throw Error(ErrorKind::argument, "--tolerance must be positive");
      config.tolerance = *tolerance;
    }

    if (fixtures) {
      if (!app.get_subcommands().empty()) throw Error(ErrorKind::argument, "--paper-fixtures takes no subcommand");
      return run_reference_fixtures(config, out);
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kExitInput;
    }

    Output result;
    const CLI::App* sub = app.get_subcommands().front();
    if (sub == c_info) result = cmd_info(info, config);
    else if (sub == c_learn) result = cmd_learn(learn, config);
    else if (sub == c_confirm) result = cmd_confirm(confirm_o, config);
    else if (sub == c_raven) result = cmd_raven(raven_o, config);
    else if (sub == c_rate) result = cmd_rate(rate, config);
    else if (sub == c_thermo) result = cmd_thermo(thermo, config);
    else if (sub == c_reason) result = cmd_reason(reason_o, config);
    else result = cmd_fuzzy(fuzzy, config);

    std::ostringstream buffer;
    emit(result, config, buffer);
    out << buffer.str();
    return kExitOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what();
    if (e.residual()) err << " [residual " << io::format_number(*e.residual()) << "]";
    err << '\n';
    return e.kind() == ErrorKind::iteration_limit ? kExitNumerical : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace ptprob::cli
