#pragma once

// File formats. JSON schemas (field names are stable):
//
//   Universe        [{"id": "x1", "coord": 3.0 | [..]}, ...]   ids may also be given as bare strings,
//                                                               scalar points as bare numbers
//   Distribution    {"universe": Universe, "mass": [..]}
//   ShannonChannel  {"universe": Universe, "labels": [..], "rows": [[..], ..]}  null marks undefined cells
//   TruthFunction   {"form": "gaussian", "params": {..}, "universe_ref": Universe | "prior"}
//   SemanticChannel {"labels": [..], "truths": [TruthFunction, ..]}
//   ThermoSystem    {"k": 1, "areas": [{"temperature", "particles", "energies", "multiplicities"}]}
//   Distortion      {"labels": [..], "values": [[d_i0, d_i1, ..], ..]}
//
// TruthFunction params by form:
//   tabulated {"values"}      gaussian {"center", "sigma"}     mvgaussian {"centers", "sigmas"}
//   logistic {"slope", "threshold"}   believable {"indicator", "disbelief"}   crisp {"members"}
// indicator/members take booleans per point or a list of point ids.
//
// Non-finite numbers are written as the strings "inf", "-inf" and "nan" and
// accepted back in that form.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ptprob/channel.hpp"
#include "ptprob/confirmation.hpp"
#include "ptprob/distribution.hpp"
#include "ptprob/learning.hpp"
#include "ptprob/rate_thermo.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob::io {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// 12 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_number(double v);
// v rounded to 12 significant digits (non-finite values pass through).
double round12(double v);

ojson number(double v);
double read_number(const json& j, std::string_view field);

json parse_json(std::string_view text, std::string_view source);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

Universe universe_from_json(const json& j);
ojson to_json(const Universe& u);

Distribution distribution_from_json(const json& j);
ojson to_json(const Distribution& d);

ShannonChannel channel_from_json(const json& j);
ojson to_json(const ShannonChannel& c);

// `fallback` is used when universe_ref is absent or "prior".
TruthFunction truth_from_json(const json& j, const std::optional<Universe>& fallback);
ojson to_json(const TruthFunction& t);

SemanticChannel semantic_channel_from_json(const json& j, const std::optional<Universe>& fallback);
ojson to_json(const SemanticChannel& sc);

ThermoSystem thermo_from_json(const json& j);
ojson to_json(const ThermoSystem& s);

DistortionMatrix distortion_from_json(const json& j);
// Header row ",y1,y2,..", then one row per instance "x_id,d,d,..". Instance
// ids are checked against `universe` when given.
DistortionMatrix distortion_from_csv(std::string_view text, const std::optional<Universe>& universe);

// Header "x_id,label" required.
LabeledSample sample_from_csv(std::string_view text);

// 2x2 table with a header naming e1/e0 columns and rows named h1/h0, in any order:
//   ,e1,e0
//   h1,a,b
//   h0,c,d
ConfusionCounts counts_from_csv(std::string_view text);

// Splits CSV text into trimmed cells, skipping blank lines. No quoting.
std::vector<std::vector<std::string>> split_csv(std::string_view text);

}  // namespace ptprob::io
