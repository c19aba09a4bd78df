#pragma once

#include <optional>
#include <string>

#include "satogr/io.hpp"

namespace satogr::cli {

constexpr const char* kVersion = "0.1.0";

struct JobConfig {
  std::string command;
  std::string input;
  std::optional<int> window;  // radius; the input file value is used when unset
  int weight = 8;
  int maxsize = 4;
  std::optional<int> triple_maxsize;  // defaults to maxsize
  int nmax = 12;
  bool odd = false;
  bool strict = false;
  bool bar = false;  // tau: tau-bar failures become errors
  std::string gr0_mode = "reflected";   // or "printed"
  std::string triple_mode = "printed";  // or "swapped"
};

struct Outcome {
  io::json report;
  int exit_code = 0;
};

io::json config_json(const JobConfig& c);

// Runs one command on an already parsed input document. Errors propagate as satogr::Error.
Outcome run(const JobConfig& c, const io::json& input);
// Reads c.input; library errors become an {"error": ...} report with exit code 2.
Outcome run_file(const JobConfig& c);

}  // namespace satogr::cli
