#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptprob/prob_core.hpp"

namespace ptprob::cli {

enum class OutputFormat { json, tsv, table };

// {"log_base": "bits"|"nats", "tolerance": 1e-9, "output_format": "json"|"tsv"|"table", "seed": 0}
// All fields optional. Commands pick their own format when none is set.
struct RunConfig {
  LogBase log_base = LogBase::bits;
  double tolerance = 1e-9;
  std::optional<OutputFormat> output_format;
  std::uint64_t seed = 0;
};

inline constexpr const char* kConfigEnv = "PTPROB_CONFIG";

RunConfig load_config(const std::string& path);
OutputFormat parse_format(const std::string& text);
LogBase parse_log_base(const std::string& text);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Bundled reference checks; one PASS/FAIL line each. Returns kExitOk when all pass.
int run_reference_fixtures(const RunConfig& config, std::ostream& out);

}  // namespace ptprob::cli
