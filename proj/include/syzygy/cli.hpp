#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace syzygy {

enum ExitCode { exit_complete = 0, exit_error = 1, exit_open = 2 };

struct CommandResult {
  int exit_code = exit_complete;
  nlohmann::ordered_json report;  // null for --help and usage errors
  std::string summary;            // human-readable lines
  std::string dot;                // graph --dot
  std::string error;              // usage or input errors
  std::string out_path;           // --out
  bool text = false;              // --format text
};

// args excludes the program name, e.g. {"pdim", "--algebra", "x.alg", "--module", "s.mod"}.
CommandResult run_command(const std::vector<std::string>& args);

// Writes the report (or DOT text) to --out or standard output and errors to standard error.
// Returns the exit code.
int emit_result(const CommandResult& r);

}  // namespace syzygy
