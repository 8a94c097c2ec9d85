#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptprob/cli.hpp"
#include "ptprob/io.hpp"

namespace ptprob::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a command produces. Nothing is written until the command succeeds.
struct Output {
  io::ojson doc;
  std::optional<Table> table;  // preferred tsv/table rendering
  OutputFormat default_format = OutputFormat::json;
  // Extra files to write after success: (path, contents).
  std::vector<std::pair<std::string, std::string>> files;
};

void emit(const Output& o, const RunConfig& config, std::ostream& out);
std::string render_tsv(const Table& t);

struct InfoOptions {
  std::string prior;
  std::string truth;
  std::optional<std::string> channel;
  std::optional<std::string> sampling;
};

struct LearnOptions {
  std::string sample;
  std::string family = "matched";
  std::optional<std::string> bounds;
  std::optional<std::string> prior;
  bool uniform_prior = false;
  std::optional<std::string> truth_tsv;
  std::optional<std::string> labels;
};

struct CountsOptions {
  std::optional<std::int64_t> a, b, c, d;
  std::optional<std::string> counts;
  bool strict = false;
};

struct RateOptions {
  std::string prior;
  std::optional<std::string> distortion;
  bool hamming = false;
  std::string s_grid = "0,-0.5,-1,-2,-4";
};

struct ThermoOptions {
  std::string system;
};

struct ReasonOptions {
  std::string spec;
};

struct FuzzyOptions {
  std::string atomics;
  std::optional<std::string> expr;
  std::optional<std::string> label;
  std::optional<std::string> prior;
};

Output cmd_info(const InfoOptions& o, const RunConfig& c);
Output cmd_learn(const LearnOptions& o, const RunConfig& c);
Output cmd_confirm(const CountsOptions& o, const RunConfig& c);
Output cmd_raven(const CountsOptions& o, const RunConfig& c);
Output cmd_rate(const RateOptions& o, const RunConfig& c);
Output cmd_thermo(const ThermoOptions& o, const RunConfig& c);
Output cmd_reason(const ReasonOptions& o, const RunConfig& c);
Output cmd_fuzzy(const FuzzyOptions& o, const RunConfig& c);

// Reasoning-table rows as JSON (shared with the fixtures).
io::ojson reason_json(const io::json& spec);

}  // namespace ptprob::cli
