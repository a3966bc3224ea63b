#pragma once

#include <string>

#include "fanalg/cli/config.hpp"

#include "json.hpp"

namespace fanalg::cli {

// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,            // success, consistent fit, suite passed
  kExitRejected = 1,      // fit rejected, suite failed, table mismatch, replay differs
  kExitInconclusive = 2,  // inconclusive fit, limits hit, no modal degree
  kExitError = 3,         // bad usage or input
};

struct CommandOutput {
  int exit_code = kExitOk;
  // {tool, version, config, result}
  nlohmann::ordered_json report;
  // Human-readable view of the report.
  std::string table;
};

// Dispatches on config.command. Throws DomainError / ParseError /
// std::runtime_error on bad input; callers map those to kExitError.
CommandOutput run_command(const RunConfig& config);

CommandOutput cmd_generate(const RunConfig& config);
CommandOutput cmd_fit(const RunConfig& config);
CommandOutput cmd_dim(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config);
CommandOutput cmd_degree(const RunConfig& config);
CommandOutput cmd_simulate(const RunConfig& config);
// Re-runs the config embedded in config.report_in and compares reports.
CommandOutput cmd_replay(const RunConfig& config);

}  // namespace fanalg::cli
