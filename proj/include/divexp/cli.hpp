#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divexp/json_io.hpp"

namespace divexp::cli {

// Malformed request; reported with exit code 2.
struct RequestError {
  std::string kind;  // "schema", "parse" or "usage"
  std::string message;
};

enum ExitCode { kOk = 0, kComputationError = 1, kRequestError = 2 };

// Runs one command. `args` excludes the program name. JSON goes to `out`
// (help text too); `in` is read only for --json-in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

// Validates a payload against requests/<subcommand> and executes it.
// Throws RequestError on a schema violation and divexp::Error on
// computation failures.
Json execute(const std::string& subcommand, const Json& payload);

}  // namespace divexp::cli
