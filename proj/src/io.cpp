#include "ptprob/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "ptprob/error.hpp"
#include "ptprob/fraction.hpp"

namespace ptprob::io {

namespace {

[[noreturn]] void bad(std::string_view field, const std::string& what) {
  throw Error(ErrorKind::parse, "field '" + std::string(field) + "': " + what);
}

const json& require(const json& j, const char* field) {
  if (!j.is_object()) bad(field, "expected an object containing it");
  const auto it = j.find(field);
  if (it == j.end()) bad(field, "missing");
  return *it;
}

std::vector<double> read_numbers(const json& j, std::string_view field) {
  if (!j.is_array()) bad(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(read_number(v, field));
  return out;
}

std::vector<std::string> read_strings(const json& j, std::string_view field) {
  if (!j.is_array()) bad(field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) bad(field, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Booleans per point, 0/1 per point, or a list of member ids.
std::vector<bool> read_indicator(const json& j, const Universe& u, std::string_view field) {
  if (!j.is_array()) bad(field, "expected an array");
  std::vector<bool> out(u.size(), false);
  if (!j.empty() && j.front().is_string()) {
    for (const auto& v : j) {
      if (!v.is_string()) bad(field, "mixes ids and flags");
      const auto i = u.find(v.get<std::string>());
      if (!i) bad(field, "unknown point id '" + v.get<std::string>() + "'");
      out[*i] = true;
    }
    return out;
  }
  if (j.size() != u.size()) bad(field, "needs one flag per universe point");
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& v = j[i];
    if (v.is_boolean()) {
      out[i] = v.get<bool>();
    } else if (v.is_number()) {
      const double x = v.get<double>();
      if (x != 0.0 && x != 1.0) bad(field, "flags must be 0 or 1");
      out[i] = x == 1.0;
    } else {
      bad(field, "expected booleans");
    }
  }
  return out;
}

ojson indicator_json(const std::vector<bool>& flags) {
  ojson a = ojson::array();
  for (bool b : flags) a.push_back(b);
  return a;
}

ojson numbers_json(std::span<const double> v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_cell(const std::string& cell, std::string_view what) {
  if (cell.empty()) bad(what, "empty cell");
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) bad(what, "'" + cell + "' is not a number");
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

ojson number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

double read_number(const json& j, std::string_view field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    try {
      return Fraction::parse(s).value();
    } catch (const Error&) {
      // exponent notation
      return parse_cell(trim(s), field);
    }
  }
  bad(field, "expected a number");
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string(source) + ": invalid JSON (" + e.what() + ")");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

// ---------------------------------------------------------------------------

Universe universe_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("universe", "expected a nonempty array");
  std::vector<Point> points;
  for (const auto& e : j) {
    if (e.is_string()) {
      points.push_back({e.get<std::string>(), {}});
    } else if (e.is_number()) {
      const double c = e.get<double>();
      points.push_back(Universe::from_coords(std::span<const double>(&c, 1))[0]);
    } else if (e.is_object()) {
      Point p;
      if (const auto c = e.find("coord"); c != e.end()) {
        if (c->is_array())
          p.coord = read_numbers(*c, "universe.coord");
        else
          p.coord = {read_number(*c, "universe.coord")};
      }
      if (const auto id = e.find("id"); id != e.end()) {
        if (!id->is_string()) bad("universe.id", "expected a string");
        p.id = id->get<std::string>();
      } else if (p.coord.size() == 1) {
        p.id = Universe::from_coords(p.coord)[0].id;
      } else {
        bad("universe.id", "missing");
      }
      points.push_back(std::move(p));
    } else {
      bad("universe", "points must be ids, numbers or {id, coord} objects");
    }
  }
  return Universe(std::move(points));
}

ojson to_json(const Universe& u) {
  ojson a = ojson::array();
  for (const auto& p : u.points()) {
    ojson o;
    o["id"] = p.id;
    if (p.coord.size() == 1)
      o["coord"] = number(p.coord[0]);
    else if (!p.coord.empty())
      o["coord"] = numbers_json(p.coord);
    a.push_back(std::move(o));
  }
  return a;
}

Distribution distribution_from_json(const json& j) {
  Universe u = universe_from_json(require(j, "universe"));
  auto mass = read_numbers(require(j, "mass"), "mass");
  if (mass.size() != u.size()) bad("mass", "length does not match the universe");
  return Distribution(std::move(u), std::move(mass));
}

ojson to_json(const Distribution& d) {
  ojson o;
  o["universe"] = to_json(d.universe());
  o["mass"] = numbers_json(d.mass());
  return o;
}

ShannonChannel channel_from_json(const json& j) {
  Universe u = universe_from_json(require(j, "universe"));
  auto labels = read_strings(require(j, "labels"), "labels");
  const json& rows_j = require(j, "rows");
  if (!rows_j.is_array()) bad("rows", "expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : rows_j) {
    if (!r.is_array()) bad("rows", "expected an array of rows");
    std::vector<double> row;
    for (const auto& v : r) row.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : read_number(v, "rows"));
    rows.push_back(std::move(row));
  }
  if (rows.size() != labels.size()) bad("rows", "one row per label is required");
  for (const auto& r : rows)
    if (r.size() != u.size()) bad("rows", "row length does not match the universe");
  return ShannonChannel(std::move(u), std::move(labels), std::move(rows));
}

ojson to_json(const ShannonChannel& c) {
  ojson o;
  o["universe"] = to_json(c.universe());
  o["labels"] = c.labels();
  ojson rows = ojson::array();
  for (std::size_t j = 0; j < c.label_count(); ++j) {
    ojson r = ojson::array();
    for (std::size_t i = 0; i < c.universe().size(); ++i) r.push_back(c.defined(i) ? number(c.row(j)[i]) : ojson(nullptr));
    rows.push_back(std::move(r));
  }
  o["rows"] = std::move(rows);
  return o;
}

TruthFunction truth_from_json(const json& j, const std::optional<Universe>& fallback) {
  const json& form_j = require(j, "form");
  if (!form_j.is_string()) bad("form", "expected a string");
  const std::string form = form_j.get<std::string>();
  const json empty = json::object();
  const json& params = j.contains("params") ? j["params"] : empty;

  std::optional<Universe> u = fallback;
  if (const auto ref = j.find("universe_ref"); ref != j.end()) {
    if (ref->is_string()) {
      if (ref->get<std::string>() != "prior") bad("universe_ref", "string value must be \"prior\"");
    } else {
      u = universe_from_json(*ref);
    }
  }
  if (!u) bad("universe_ref", "no universe given and none available from a prior");

  if (form == "tabulated") return TruthFunction(*u, form::Tabulated{read_numbers(require(params, "values"), "params.values")});
  if (form == "gaussian") {
    const json& c = require(params, "center");
    std::vector<double> center = c.is_array() ? read_numbers(c, "params.center") : std::vector<double>{read_number(c, "params.center")};
    return TruthFunction(*u, form::Gaussian{std::move(center), read_number(require(params, "sigma"), "params.sigma")});
  }
  if (form == "mvgaussian")
    return TruthFunction(*u, form::MvGaussian{read_numbers(require(params, "centers"), "params.centers"),
                                              read_numbers(require(params, "sigmas"), "params.sigmas")});
  if (form == "logistic")
    return TruthFunction(*u, form::Logistic{read_number(require(params, "slope"), "params.slope"),
                                            read_number(require(params, "threshold"), "params.threshold")});
  if (form == "believable")
    return TruthFunction(*u, form::Believable{read_indicator(require(params, "indicator"), *u, "params.indicator"),
                                              read_number(require(params, "disbelief"), "params.disbelief")});
  if (form == "crisp") return TruthFunction(*u, form::Crisp{read_indicator(require(params, "members"), *u, "params.members")});
  bad("form", "unknown truth-function form '" + form + "'");
}

ojson to_json(const TruthFunction& t) {
  ojson o;
  o["form"] = std::string(form_name(t.form()));
  ojson p = ojson::object();
  std::visit(
      [&p](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, form::Tabulated>) {
          p["values"] = numbers_json(f.values);
        } else if constexpr (std::is_same_v<F, form::Gaussian>) {
          p["center"] = f.center.size() == 1 ? number(f.center[0]) : numbers_json(f.center);
          p["sigma"] = number(f.sigma);
        } else if constexpr (std::is_same_v<F, form::MvGaussian>) {
          p["centers"] = numbers_json(f.centers);
          p["sigmas"] = numbers_json(f.sigmas);
        } else if constexpr (std::is_same_v<F, form::Logistic>) {
          p["slope"] = number(f.slope);
          p["threshold"] = number(f.threshold);
        } else if constexpr (std::is_same_v<F, form::Believable>) {
          p["indicator"] = indicator_json(f.indicator);
          p["disbelief"] = number(f.disbelief);
        } else {
          p["members"] = indicator_json(f.members);
        }
      },
      t.form());
  o["params"] = std::move(p);
  o["universe_ref"] = to_json(t.universe());
  return o;
}

SemanticChannel semantic_channel_from_json(const json& j, const std::optional<Universe>& fallback) {
  auto labels = read_strings(require(j, "labels"), "labels");
  std::optional<Universe> u = fallback;
  if (j.contains("universe")) u = universe_from_json(j["universe"]);
  const json& truths_j = require(j, "truths");
  if (!truths_j.is_array()) bad("truths", "expected an array");
  std::vector<TruthFunction> truths;
  for (const auto& t : truths_j) truths.push_back(truth_from_json(t, u));
  if (truths.size() != labels.size()) bad("truths", "one truth function per label is required");
  return SemanticChannel(std::move(labels), std::move(truths));
}

ojson to_json(const SemanticChannel& sc) {
  ojson o;
  o["labels"] = sc.labels();
  ojson t = ojson::array();
  for (const auto& tf : sc.truths()) t.push_back(to_json(tf));
  o["truths"] = std::move(t);
  return o;
}

ThermoSystem thermo_from_json(const json& j) {
  ThermoSystem s;
  if (j.contains("k")) s.k = read_number(j["k"], "k");
  const json& areas = require(j, "areas");
  if (!areas.is_array()) bad("areas", "expected an array");
  for (const auto& a : areas) {
    ThermoArea area;
    area.temperature = read_number(require(a, "temperature"), "areas.temperature");
    area.particles = read_number(require(a, "particles"), "areas.particles");
    area.energies = read_numbers(require(a, "energies"), "areas.energies");
    area.multiplicities = read_numbers(require(a, "multiplicities"), "areas.multiplicities");
    s.areas.push_back(std::move(area));
  }
  validate(s);
  return s;
}

ojson to_json(const ThermoSystem& s) {
  ojson o;
  o["k"] = number(s.k);
  ojson areas = ojson::array();
  for (const auto& a : s.areas) {
    ojson x;
    x["temperature"] = number(a.temperature);
    x["particles"] = number(a.particles);
    x["energies"] = numbers_json(a.energies);
    x["multiplicities"] = numbers_json(a.multiplicities);
    areas.push_back(std::move(x));
  }
  o["areas"] = std::move(areas);
  return o;
}

DistortionMatrix distortion_from_json(const json& j) {
  auto labels = read_strings(require(j, "labels"), "labels");
  const json& values = require(j, "values");
  if (!values.is_array()) bad("values", "expected an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : values) rows.push_back(read_numbers(r, "values"));
  return DistortionMatrix(std::move(labels), std::move(rows));
}

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (!trim(line).empty()) {
      std::vector<std::string> cells;
      std::size_t c = 0;
      while (true) {
        const std::size_t comma = line.find(',', c);
        cells.push_back(trim(line.substr(c, comma == std::string_view::npos ? std::string_view::npos : comma - c)));
        if (comma == std::string_view::npos) break;
        c = comma + 1;
      }
      out.push_back(std::move(cells));
    }
    start = end + 1;
  }
  return out;
}

DistortionMatrix distortion_from_csv(std::string_view text, const std::optional<Universe>& universe) {
  const auto rows = split_csv(text);
  if (rows.size() < 2) bad("distortion", "needs a header row and at least one instance row");
  std::vector<std::string> labels(rows[0].begin() + 1, rows[0].end());
  if (labels.empty()) bad("distortion", "header names no reproduction labels");
  std::vector<std::vector<double>> values;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != labels.size() + 1) bad("distortion", "row " + std::to_string(r + 1) + " has the wrong number of cells");
    if (universe && (r - 1 >= universe->size() || (*universe)[r - 1].id != row[0]))
      bad("distortion", "row " + std::to_string(r + 1) + " instance '" + row[0] + "' does not follow the prior universe order");
    std::vector<double> v;
    for (std::size_t k = 1; k < row.size(); ++k) v.push_back(parse_cell(row[k], "distortion"));
    values.push_back(std::move(v));
  }
  return DistortionMatrix(std::move(labels), std::move(values));
}

LabeledSample sample_from_csv(std::string_view text) {
  const auto rows = split_csv(text);
  if (rows.empty() || rows[0].size() != 2 || rows[0][0] != "x_id" || rows[0][1] != "label")
    bad("sample", "header 'x_id,label' is required");
  LabeledSample s;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2 || rows[r][0].empty() || rows[r][1].empty())
      bad("sample", "row " + std::to_string(r + 1) + " needs exactly x_id and label");
    s.examples.push_back({rows[r][0], rows[r][1]});
  }
  if (s.examples.empty()) bad("sample", "no examples");
  return s;
}

ConfusionCounts counts_from_csv(std::string_view text) {
  const auto rows = split_csv(text);
  if (rows.size() != 3 || rows[0].size() != 3) bad("counts", "expected a 3x3 grid: header plus rows h1 and h0");
  std::map<std::string, std::size_t> col;
  for (std::size_t k = 1; k < 3; ++k) col[rows[0][k]] = k;
  if (!col.contains("e1") || !col.contains("e0")) bad("counts", "header must name columns e1 and e0");
  std::map<std::string, const std::vector<std::string>*> row;
  for (std::size_t r = 1; r < 3; ++r) {
    if (rows[r].size() != 3) bad("counts", "each row needs a name and two counts");
    row[rows[r][0]] = &rows[r];
  }
  if (!row.contains("h1") || !row.contains("h0")) bad("counts", "rows must be named h1 and h0");
  auto cell = [&](const char* r, const char* c) {
    const std::string& s = (*row[r])[col[c]];
    const double v = parse_cell(s, "counts");
    if (v < 0 || v != std::floor(v) || v > 1e15) bad("counts", "'" + s + "' is not a nonnegative integer");
    return static_cast<std::int64_t>(v);
  };
  return {cell("h1", "e1"), cell("h1", "e0"), cell("h0", "e1"), cell("h0", "e0")};
}

}  // namespace ptprob::io
