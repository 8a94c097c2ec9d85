#include "ptprob/cli.hpp"

#include "ptprob/error.hpp"
#include "ptprob/io.hpp"

namespace ptprob::cli {

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "tsv") return OutputFormat::tsv;
  if (text == "table") return OutputFormat::table;
  throw Error(ErrorKind::parse, "output_format must be json, tsv or table, got '" + text + "'");
}

LogBase parse_log_base(const std::string& text) {
  if (text == "bits" || text == "2") return LogBase::bits;
  if (text == "nats" || text == "e") return LogBase::nats;
  throw Error(ErrorKind::parse, "log_base must be bits or nats, got '" + text + "'");
}

RunConfig load_config(const std::string& path) {
  const io::json j = io::read_json_file(path);
  if (!j.is_object()) throw Error(ErrorKind::parse, path + ": config must be a JSON object");
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "log_base") {
      if (!value.is_string()) throw Error(ErrorKind::parse, "field 'log_base': expected a string");
      c.log_base = parse_log_base(value.get<std::string>());
    } else if (key == "tolerance") {
      c.tolerance = io::read_number(value, "tolerance");
      if (!(c.tolerance > 0.0)) throw Error(ErrorKind::parse, "field 'tolerance': must be positive");
    } else if (key == "output_format") {
      if (!value.is_string()) throw Error(ErrorKind::parse, "field 'output_format': expected a string");
      c.output_format = parse_format(value.get<std::string>());
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw Error(ErrorKind::parse, "field 'seed': expected a nonnegative integer");
      c.seed = value.get<std::uint64_t>();
    } else {
      throw Error(ErrorKind::parse, path + ": unknown config field '" + key + "'");
    }
  }
  return c;
}

}  // namespace ptprob::cli
