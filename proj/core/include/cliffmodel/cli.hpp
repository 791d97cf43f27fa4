#pragma once

#include <optional>
#include <string>

#include "cliffmodel/model.hpp"

namespace cliff {

// Parsed command-line invocation, independent of the argv front end.
struct CommandRequest {
  std::string command;  // models|gammas|gram|classify|bilinear|verify|sweep
  std::optional<int> r, s, t;
  std::optional<std::string> preset;
  std::string format = "text";  // "text" or "json"
  std::optional<std::string> output_path;
  std::optional<int> max_dim;           // classify, sweep
  std::optional<int> degree;            // bilinear
  std::optional<std::string> psi1, psi2;  // bilinear literals
  std::optional<int> threads;           // sweep
  int samples = 3;                      // verify/sweep random-check depth
};

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 usage error
  std::string output;  // document (stdout) on success
  std::string error;   // diagnostic (stderr) when exit_code != 0
};

// Executes one request.  Usage problems (unknown command, bad combination of
// options, malformed literals) return exit code 2 with a diagnostic; failed
// verification returns 1; internal errors surface as exceptions.
CommandResult run(const CommandRequest& request);

}  // namespace cliff
