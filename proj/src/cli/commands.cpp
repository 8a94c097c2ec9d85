#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ptprob/confirmation.hpp"
#include "ptprob/error.hpp"
#include "ptprob/fuzzy.hpp"
#include "ptprob/learning.hpp"
#include "ptprob/rate_thermo.hpp"
#include "ptprob/reasoning.hpp"
#include "ptprob/sem_info.hpp"
#include "ptprob/semantic.hpp"

namespace ptprob::cli {

using io::json;
using io::number;
using io::ojson;

namespace {

std::string num(double v) { return io::format_number(v); }

void round_tree(ojson& j) {
  if (j.is_number_float()) {
    j = io::round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_tree(child);
  }
}

void flatten(const ojson& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.push_back({prefix, j.get<std::string>()});
  } else if (j.is_number_float()) {
    rows.push_back({prefix, num(j.get<double>())});
  } else {
    rows.push_back({prefix, j.dump()});
  }
}

std::string render_aligned(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& row) {
    for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t k = 0; k < row.size(); ++k) {
      s += row[k];
      if (k + 1 < row.size()) s += std::string(width[k] - row[k].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

ojson mass_map(const Distribution& d) {
  ojson o = ojson::object();
  for (std::size_t i = 0; i < d.size(); ++i) o[d.universe()[i].id] = number(d[i]);
  return o;
}

ojson values_map(const TruthFunction& t) {
  ojson o = ojson::object();
  for (std::size_t i = 0; i < t.size(); ++i) o[t.universe()[i].id] = number(t[i]);
  return o;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& row : io::split_csv(s))
    for (const auto& cell : row) out.push_back(cell);
  return out;
}

double parse_value(const std::string& s, const char* what) {
  return io::read_number(json(s), what);
}

Distribution load_distribution(const std::string& path) { return io::distribution_from_json(io::read_json_file(path)); }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::parse, "cannot write '" + path + "'");
  f << contents;
}

double in_units(double bits, LogBase base) { return base == LogBase::bits ? bits : bits * std::numbers::ln2; }

}  // namespace

std::string render_tsv(const Table& t) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "\t" : "") << row[k];
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out.str();
}

void emit(const Output& o, const RunConfig& config, std::ostream& out) {
  for (const auto& [path, contents] : o.files) write_file(path, contents);
  const OutputFormat f = config.output_format.value_or(o.default_format);
  if (f == OutputFormat::json) {
    ojson doc = o.doc;
    round_tree(doc);
    out << doc.dump(2) << '\n';
    return;
  }
  Table t;
  if (o.table) {
    t = *o.table;
  } else {
    t.header = {"key", "value"};
    flatten(o.doc, "", t.rows);
  }
  out << (f == OutputFormat::tsv ? render_tsv(t) : render_aligned(t));
}

// ---------------------------------------------------------------------------

Output cmd_info(const InfoOptions& o, const RunConfig& c) {
  const Distribution prior = load_distribution(o.prior);
  const json tj = io::read_json_file(o.truth);
  std::optional<SemanticChannel> sc;
  if (tj.is_object() && tj.contains("truths")) {
    sc = io::semantic_channel_from_json(tj, prior.universe());
  } else {
    const std::string label = tj.is_object() && tj.contains("label") && tj["label"].is_string()
                                  ? tj["label"].get<std::string>()
                                  : "theta";
    sc = SemanticChannel({label}, {io::truth_from_json(tj, prior.universe())});
  }
  std::optional<Distribution> sampling;
  if (o.sampling) sampling = load_distribution(*o.sampling);
  std::optional<ShannonChannel> channel;
  if (o.channel) channel = io::channel_from_json(io::read_json_file(*o.channel));

  std::optional<SemanticInfoReport> mi;
  if (channel) mi = semantic_mutual_info(*sc, prior, *channel, c.log_base);

  Output out;
  out.doc["units"] = unit_name(c.log_base);
  Table table{{"label", "x_id", "truth", "info"}, {}};
  ojson labels = ojson::array();
  for (std::size_t j = 0; j < sc->size(); ++j) {
    const TruthFunction& t = (*sc)[j];
    ojson entry;
    entry["label"] = sc->labels()[j];
    entry["logical_probability"] = number(logical_probability(t, prior));
    ojson points = ojson::object();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double info = semantic_info_point(t, prior, i, c.log_base);
      points[t.universe()[i].id] = number(info);
      table.rows.push_back({sc->labels()[j], t.universe()[i].id, num(t[i]), num(info)});
    }
    entry["point_info"] = std::move(points);
    if (sampling) {
      const AverageInfo avg = avg_semantic_info(t, *sampling, prior, c.log_base);
      entry["avg_info"] = number(avg.value);
      entry["falsifying_points"] = avg.falsifying_points;
    } else if (mi) {
      entry["avg_info"] = mi->avg_info[j] ? number(*mi->avg_info[j]) : ojson(nullptr);
      entry["falsifying_points"] = mi->falsifying_points[j];
    }
    labels.push_back(std::move(entry));
  }
  out.doc["labels"] = std::move(labels);
  if (mi) {
    out.doc["mutual_info"] = number(mi->mutual_info);
    out.doc["shannon_mutual_info"] = number(mi->shannon_mutual_info);
  }
  out.table = std::move(table);
  return out;
}

Output cmd_learn(const LearnOptions& o, const RunConfig&) {
  const LabeledSample sample = io::sample_from_csv(io::read_text_file(o.sample));
  std::optional<Distribution> given_prior;
  if (o.prior) given_prior = load_distribution(*o.prior);
  if (o.uniform_prior && given_prior) throw Error(ErrorKind::argument, "--prior and --uniform-prior are exclusive");
  const Universe universe = given_prior ? given_prior->universe() : sample_universe(sample);
  const EmpiricalModel model = empirical_distributions(sample, universe);
  // --labels picks which truths to learn; every label still counts towards P(x)
  std::vector<std::size_t> picked;
  if (o.labels) {
    for (const auto& name : split_list(*o.labels)) {
      const auto& all = model.channel.labels();
      const auto it = std::find(all.begin(), all.end(), name);
      if (it == all.end()) throw Error(ErrorKind::unused_label, "label '" + name + "' has no examples");
      if (std::find(picked.begin(), picked.end(), std::size_t(it - all.begin())) != picked.end())
        throw Error(ErrorKind::argument, "duplicate label '" + name + "'");
      picked.push_back(static_cast<std::size_t>(it - all.begin()));
    }
  } else {
    for (std::size_t j = 0; j < model.channel.label_count(); ++j) picked.push_back(j);
  }
  std::vector<std::string> names;
  for (const std::size_t j : picked) names.push_back(model.channel.labels()[j]);

  Output out;
  out.doc["family"] = o.family;
  std::vector<TruthFunction> truths;
  ojson entries = ojson::array();

  if (o.family == "matched") {
    if (o.bounds) throw Error(ErrorKind::argument, "--bounds applies to parametric families only");
    const SemanticChannel sc = match_truth_functions(model.channel);
    for (const std::size_t j : picked) {
      ojson e;
      e["label"] = sc.labels()[j];
      e["label_probability"] = number(model.label_prior[j]);
      entries.push_back(std::move(e));
      truths.push_back(sc[j]);
    }
  } else {
    FitOptions fo;
    if (o.family == "logistic")
      fo.family = Family::logistic;
    else if (o.family == "gaussian")
      fo.family = Family::gaussian;
    else
      throw Error(ErrorKind::argument, "--family must be matched, logistic or gaussian");
    if (universe.dimension() != 1) throw Error(ErrorKind::form, "parametric families need numeric x ids");

    double lo = universe.scalar(0), hi = universe.scalar(0);
    for (std::size_t i = 0; i < universe.size(); ++i) {
      lo = std::min(lo, universe.scalar(i));
      hi = std::max(hi, universe.scalar(i));
    }
    const double range = hi > lo ? hi - lo : 1.0;
    const double spacing = universe.size() > 1 ? range / static_cast<double>(universe.size() - 1) : 1.0;
    if (o.bounds) {
      const auto v = split_list(*o.bounds);
      if (v.size() != 4) throw Error(ErrorKind::argument, "--bounds needs lo1,hi1,lo2,hi2");
      fo.bounds = {ParamBounds{parse_value(v[0], "bounds"), parse_value(v[1], "bounds")},
                   ParamBounds{parse_value(v[2], "bounds"), parse_value(v[3], "bounds")}};
    } else if (fo.family == Family::logistic) {
      fo.bounds = {ParamBounds{-10.0 / spacing, 10.0 / spacing}, ParamBounds{lo, hi}};
    } else {
      fo.bounds = {ParamBounds{lo, hi}, ParamBounds{spacing / 2.0, range}};
    }

    std::optional<Distribution> fit_prior;
    if (given_prior)
      fit_prior = *given_prior;
    else if (!o.uniform_prior)
      fit_prior = model.prior;
    out.doc["prior"] = given_prior ? "given" : o.uniform_prior ? "uniform (assumed)" : "empirical";

    const auto pnames = param_names(fo.family);
    for (const std::size_t j : picked) {
      const FitResult r = fit_parametric_truth(model.posteriors[j], fit_prior, fo);
      ojson e;
      e["label"] = model.channel.labels()[j];
      e["family"] = family_name(r.family);
      ojson params;
      params[pnames[0]] = number(r.params[0]);
      params[pnames[1]] = number(r.params[1]);
      e["params"] = std::move(params);
      e["objective_bits"] = number(r.objective_bits);
      e["iterations"] = r.iterations;
      ojson warnings = ojson::array();
      if (r.unbounded_precision) warnings.push_back("sampling has a single support point; precision is capped by the bounds");
      for (int k = 0; k < 2; ++k)
        if (r.at_bound[k]) warnings.push_back(std::string(pnames[k]) + " stopped at a bound");
      if (r.prior_assumed_uniform) warnings.push_back("P(x) unknown; uniform prior assumed");
      e["warnings"] = std::move(warnings);
      entries.push_back(std::move(e));
      truths.push_back(r.truth(universe));
    }
  }
  out.doc["labels"] = std::move(entries);
  const SemanticChannel sc(names, truths);
  out.doc["truths"] = io::to_json(sc);

  Table table;
  table.header = {"x_id"};
  for (const auto& n : names) table.header.push_back(n);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    std::vector<std::string> row{universe[i].id};
    for (const auto& t : truths) row.push_back(num(t[i]));
    table.rows.push_back(std::move(row));
  }
  if (o.truth_tsv) out.files.emplace_back(*o.truth_tsv, render_tsv(table));
  out.table = std::move(table);
  return out;
}

namespace {

ConfusionCounts read_counts(const CountsOptions& o) {
  if (o.counts) {
    if (o.a || o.b || o.c || o.d) throw Error(ErrorKind::argument, "give either --counts or --a/--b/--c/--d");
    return io::counts_from_csv(io::read_text_file(*o.counts));
  }
  if (!o.a || !o.b || !o.c || !o.d) throw Error(ErrorKind::argument, "all of --a --b --c --d are required");
  const ConfusionCounts k{*o.a, *o.b, *o.c, *o.d};
  if (k.a < 0 || k.b < 0 || k.c < 0 || k.d < 0) throw Error(ErrorKind::count, "counts must be nonnegative");
  return k;
}

ojson counts_json(const ConfusionCounts& k) {
  ojson o;
  o["a"] = k.a;
  o["b"] = k.b;
  o["c"] = k.c;
  o["d"] = k.d;
  return o;
}

template <typename F>
std::optional<Fraction> exact_or_empty(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::undefined_measure) return std::nullopt;
    throw;
  }
}

}  // namespace

Output cmd_confirm(const CountsOptions& o, const RunConfig&) {
  const ConfusionCounts k = read_counts(o);
  const ConfirmationReport r = confirm(k);
  const std::vector<std::pair<const char*, std::optional<double>>> measures{
      {"lr_plus", r.lr_plus}, {"lr_minus", r.lr_minus}, {"f1", r.f1},   {"f0", r.f0},   {"b1_star", r.b1_star},
      {"b0_star", r.b0_star}, {"c1_star", r.c1_star},   {"c0_star", r.c0_star}, {"cr1", r.cr1}, {"cr0", r.cr0}};
  const std::vector<std::pair<const char*, std::optional<Fraction>>> exact{
      {"f1", exact_or_empty([&] { return f1_exact(k); })},
      {"f0", exact_or_empty([&] { return f0_exact(k); })},
      {"b1_star", exact_or_empty([&] { return b1_star_exact(k); })},
      {"b0_star", exact_or_empty([&] { return b0_star_exact(k); })},
      {"c1_star", exact_or_empty([&] { return c1_star_exact(k); })},
      {"c0_star", exact_or_empty([&] { return c0_star_exact(k); })}};

  Output out;
  out.doc["counts"] = counts_json(k);
  ojson m = ojson::object();
  ojson undefined = ojson::array();
  Table table{{"measure", "value", "exact"}, {}};
  for (const auto& [name, v] : measures) {
    m[name] = v ? number(*v) : ojson(nullptr);
    // correct rates are absent by construction for negative c*
    if (!v && std::string(name).rfind("cr", 0) != 0) undefined.push_back(name);
    std::string ex;
    for (const auto& [en, ev] : exact)
      if (std::string(en) == name && ev) ex = ev->str();
    table.rows.push_back({name, v ? num(*v) : "undefined", ex});
  }
  out.doc["measures"] = std::move(m);
  ojson ex = ojson::object();
  for (const auto& [name, v] : exact) ex[name] = v ? ojson(v->str()) : ojson(nullptr);
  out.doc["exact"] = std::move(ex);
  if (o.strict && !undefined.empty())
    throw Error(ErrorKind::undefined_measure, "undefined measures: " + undefined.dump());
  out.doc["undefined"] = undefined;
  try {
    const SymmetryReport s = symmetry_check(k);
    ojson sj;
    sj["b1_residual"] = number(s.b1_residual);
    sj["b0_residual"] = number(s.b0_residual);
    sj["c1_residual"] = number(s.c1_residual);
    sj["c0_residual"] = number(s.c0_residual);
    sj["b_star_e1_h0"] = number(s.b1_swapped);
    sj["c_star_e1_h0"] = number(s.c1_swapped);
    out.doc["symmetry"] = std::move(sj);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::undefined_measure) throw;
    out.doc["symmetry"] = nullptr;
  }
  out.table = std::move(table);
  return out;
}

Output cmd_raven(const CountsOptions& o, const RunConfig&) {
  const ConfusionCounts k = read_counts(o);
  Output out;
  out.doc["counts"] = counts_json(k);
  ojson rows = ojson::array();
  ojson zero_d = ojson::array();
  std::vector<std::string> undefined;
  Table table{{"measure", "delta_a", "delta_d", "delta_d_zero", "delta_a_gt_delta_d"}, {}};
  for (Measure m : {Measure::f, Measure::b_star, Measure::c_star, Measure::lr_plus}) {
    ojson r;
    r["measure"] = measure_name(m);
    try {
      const Sensitivity s = raven_sensitivity(k, {m}).front();
      r["delta_a"] = number(s.delta_a);
      r["delta_d"] = number(s.delta_d);
      r["delta_d_zero"] = s.delta_d == 0.0;
      r["delta_a_gt_delta_d"] = s.a_exceeds_d;
      if (s.delta_d == 0.0) zero_d.push_back(measure_name(m));
      table.rows.push_back({measure_name(m), num(s.delta_a), num(s.delta_d), s.delta_d == 0.0 ? "yes" : "no",
                            s.a_exceeds_d ? "yes" : "no"});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::undefined_measure) throw;
      undefined.push_back(measure_name(m));
      r["undefined"] = true;
      table.rows.push_back({measure_name(m), "undefined", "undefined", "-", "-"});
    }
    rows.push_back(std::move(r));
  }
  if (o.strict && !undefined.empty())
    throw Error(ErrorKind::undefined_measure, "undefined measures: " + ojson(undefined).dump());
  out.doc["sensitivity"] = std::move(rows);
  out.doc["zero_delta_d"] = std::move(zero_d);
  out.table = std::move(table);
  return out;
}

Output cmd_rate(const RateOptions& o, const RunConfig& c) {
  const Distribution prior = load_distribution(o.prior);
  if (o.hamming == o.distortion.has_value()) throw Error(ErrorKind::argument, "give exactly one of --distortion or --hamming");
  std::optional<DistortionMatrix> d;
  if (o.hamming) {
    d = DistortionMatrix::hamming(prior.universe());
  } else {
    const std::string text = io::read_text_file(*o.distortion);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      d = io::distortion_from_json(io::parse_json(text, *o.distortion));
    else
      d = io::distortion_from_csv(text, prior.universe());
  }
  std::vector<double> grid;
  for (const auto& s : split_list(o.s_grid)) grid.push_back(parse_value(s, "s-grid"));
  if (grid.empty()) throw Error(ErrorKind::argument, "--s-grid is empty");
  const std::vector<RdPoint> curve = rd_curve(prior, *d, grid);

  Output out;
  out.default_format = OutputFormat::tsv;
  out.doc["units"] = unit_name(c.log_base);
  ojson points = ojson::array();
  Table table{{"s", "D", "R"}, {}};
  for (const auto& p : curve) {
    const double r = in_units(p.R, c.log_base);
    ojson j;
    j["s"] = number(p.s);
    j["D"] = number(p.D);
    j["R"] = number(r);
    j["r_theta"] = number(in_units(r_theta_from_rd(p, prior, *d), c.log_base));
    j["reproduction_prior"] = mass_map(p.reproduction_prior);
    j["pruned_labels"] = p.pruned_labels;
    j["sweeps"] = p.sweeps;
    points.push_back(std::move(j));
    table.rows.push_back({num(p.s), num(p.D), num(r)});
  }
  out.doc["points"] = std::move(points);
  out.table = std::move(table);
  return out;
}

Output cmd_thermo(const ThermoOptions& o, const RunConfig& c) {
  const ThermoSystem sys = io::thermo_from_json(io::read_json_file(o.system));
  const EntropyInfoRelation r = entropy_info_relation(sys);
  Output out;
  out.doc["r_theta_nats"] = number(r.r_theta_nats);
  out.doc["r_theta_bits"] = number(r.r_theta_bits);
  out.doc["entropy"] = number(r.entropy);
  out.doc["ln_g_minus_s_over_kn"] = number(r.ln_g_minus_s_over_kn);
  out.doc["residual"] = number(r.residual);
  out.doc["relation_holds"] = r.residual < c.tolerance;
  return out;
}

namespace {

Distribution hypothesis_prior(const json& j) {
  if (j.is_object() && j.contains("universe")) return io::distribution_from_json(j);
  if (!j.is_object() || !j.contains("h1") || !j.contains("h0"))
    throw Error(ErrorKind::parse, "field 'h_prior': expected {\"h1\": p, \"h0\": q} or a distribution");
  return Distribution(hypothesis_universe(),
                      {io::read_number(j["h1"], "h_prior.h1"), io::read_number(j["h0"], "h_prior.h0")});
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw Error(ErrorKind::parse, std::string("field '") + name + "': missing");
  return j[name];
}

double number_field(const json& j, const char* name) { return io::read_number(field(j, name), name); }

ReasoningRow row_from_json(const json& j) {
  if (!j.is_object() || !j.contains("row") || !j["row"].is_string())
    throw Error(ErrorKind::parse, "field 'row': expected the row kind as a string");
  const std::string kind = j["row"].get<std::string>();
  if (kind == "bayes_prediction") {
    std::vector<double> tpf;
    const json& r = field(j, "tpf_row");
    if (!r.is_array()) throw Error(ErrorKind::parse, "field 'tpf_row': expected an array");
    for (const auto& v : r) tpf.push_back(io::read_number(v, "tpf_row"));
    return row::BayesPrediction{io::distribution_from_json(field(j, "prior")), std::move(tpf)};
  }
  if (kind == "set_conditioning")
    return row::SetConditioning{number_field(j, "t_a_given_b"), number_field(j, "t_a_given_bc"), number_field(j, "t_b")};
  if (kind == "truth_evaluation" || kind == "semantic_prediction") {
    Distribution prior = io::distribution_from_json(field(j, "prior"));
    TruthFunction t = io::truth_from_json(field(j, "truth"), prior.universe());
    if (kind == "semantic_prediction") return row::SemanticPrediction{std::move(t), std::move(prior)};
    const json& p = field(j, "point");
    if (!p.is_string()) throw Error(ErrorKind::parse, "field 'point': expected a point id");
    const std::size_t i = prior.universe().index_of(p.get<std::string>());
    return row::TruthEvaluation{std::move(t), std::move(prior), i};
  }
  if (kind == "induction")
    return row::Induction{io::distribution_from_json(field(j, "likelihood")), io::distribution_from_json(field(j, "prior"))};
  if (kind == "logical_inference") return row::LogicalInference{io::channel_from_json(field(j, "channel"))};
  if (kind == "channel_syllogism") return row::ChannelSyllogism{number_field(j, "b1_star"), hypothesis_prior(field(j, "h_prior"))};
  if (kind == "prediction_syllogism") return row::PredictionSyllogism{number_field(j, "c1_star")};
  throw Error(ErrorKind::parse, "field 'row': unknown row kind '" + kind + "'");
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ojson result_json(const ReasoningResult& r) {
  return std::visit(overloaded{
                        [](const BayesPosterior& x) {
                          ojson o;
                          o["label_probability"] = number(x.label_prob);
                          o["posterior"] = mass_map(x.posterior);
                          return o;
                        },
                        [](const BayesIResult& x) {
                          ojson o;
                          o["t_a"] = number(x.t_a);
                          o["t_b_given_a"] = number(x.t_b_given_a);
                          return o;
                        },
                        [](const TruthAndLogical& x) {
                          ojson o;
                          o["truth"] = number(x.truth);
                          o["logical_probability"] = number(x.logical_prob);
                          return o;
                        },
                        [](const Distribution& x) {
                          ojson o;
                          o["consequence"] = mass_map(x);
                          return o;
                        },
                        [](const TruthFromLikelihood& x) {
                          ojson o;
                          o["truth"] = values_map(x.truth);
                          o["logical_probability"] = number(x.logical_prob);
                          return o;
                        },
                        [](const SemanticChannel& x) {
                          ojson o;
                          ojson t = ojson::object();
                          for (std::size_t j = 0; j < x.size(); ++j) t[x.labels()[j]] = values_map(x[j]);
                          o["truths"] = std::move(t);
                          return o;
                        },
                    },
                    r);
}

}  // namespace

ojson reason_json(const json& spec) {
  ojson o;
  o["row"] = spec.is_object() && spec.contains("row") ? spec["row"] : json(nullptr);
  o["result"] = result_json(reason(row_from_json(spec)));
  return o;
}

Output cmd_reason(const ReasonOptions& o, const RunConfig&) {
  const json spec = io::read_json_file(o.spec);
  Output out;
  if (spec.is_object() && spec.contains("rows")) {
    if (!spec["rows"].is_array()) throw Error(ErrorKind::parse, "field 'rows': expected an array");
    ojson results = ojson::array();
    for (const auto& r : spec["rows"]) results.push_back(reason_json(r));
    out.doc["results"] = std::move(results);
  } else {
    out.doc = reason_json(spec);
  }
  return out;
}

Output cmd_fuzzy(const FuzzyOptions& o, const RunConfig&) {
  if (o.expr.has_value() == o.label.has_value()) throw Error(ErrorKind::argument, "give exactly one of --expr or --label");
  std::optional<Distribution> prior;
  if (o.prior) prior = load_distribution(*o.prior);
  const json j = io::read_json_file(o.atomics);
  std::optional<Universe> u;
  if (prior) u = prior->universe();
  if (j.is_object() && j.contains("universe")) u = io::universe_from_json(j["universe"]);
  if (!j.is_object() || !j.contains("atomics") || !j["atomics"].is_object())
    throw Error(ErrorKind::parse, "field 'atomics': expected an object of named truth functions");
  std::map<std::string, TruthFunction> atomics;
  for (const auto& [name, tj] : j["atomics"].items()) atomics.emplace(name, io::truth_from_json(tj, u));

  const std::string text = o.expr ? *o.expr : compound_label_expression(*o.label);
  const TruthFunction t = compound_label_truth(atomics, text);

  Output out;
  out.default_format = OutputFormat::tsv;
  out.doc["expression"] = Expression::parse(text).str();
  out.doc["values"] = values_map(t);
  if (prior) out.doc["logical_probability"] = number(logical_probability(t, *prior));
  Table table{{"x_id", "truth"}, {}};
  for (std::size_t i = 0; i < t.size(); ++i) table.rows.push_back({t.universe()[i].id, num(t[i])});
  out.table = std::move(table);
  return out;
}

}  // namespace ptprob::cli
