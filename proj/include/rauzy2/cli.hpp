#pragma once

#include <optional>
#include <string>

#include "rauzy2/verify.hpp"

namespace rauzy2 {

struct RunConfig {
  std::string command;  // info | surface | fractal | verify
  std::optional<std::string> case_id;
  std::optional<long> a;
  std::optional<unsigned> n;
  std::int64_t radius = 3;
  std::string tol = "1e-9";
  std::string which = "sigma";
  std::string format;  // empty: text for info/verify, svg for surface/fractal
  std::string out;
  bool all = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

enum ExitCode { kExitPass = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitResource = 3 };

std::string cmd_info(const CaseSpec& spec, const RunConfig& cfg);
std::string cmd_surface(const CaseSpec& spec, const RunConfig& cfg);
std::string cmd_fractal(const CaseSpec& spec, const RunConfig& cfg);
// Returns the report; `passed` receives the aggregate verdict.
std::string cmd_verify(const RunConfig& cfg, bool& passed);

// Validates the configuration, dispatches, and maps errors to exit codes.
CommandResult run_command(const RunConfig& cfg);

// Full command-line entry point (argument parsing, output file handling).
int cli_main(int argc, char** argv);

}  // namespace rauzy2
