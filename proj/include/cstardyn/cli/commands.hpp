#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cstardyn/io/json_io.hpp"

namespace cstardyn::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Bad flags, malformed JSON or a payload of the wrong shape.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<std::string> system_file;
  std::optional<std::string> inline_json;
  std::optional<std::string> name;
  int n = 2;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::optional<std::string> out;
  /// trace-cone sample counts and pd oracle draws.
  int count = 10000;
  int sigma_count = 100;
  int trials = 1000;
};

struct CommandResult {
  Json report;
  int exit_code = kPass;
  /// One-line human summary.
  std::string summary;
};

/// Payload from --system or --inline; exactly one must be given.
Json load_payload(const RunConfig& config);

CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_example(const RunConfig& config);
CommandResult cmd_trace_cone(const RunConfig& config);
CommandResult cmd_pd(const RunConfig& config);

/// Validates the config and dispatches on config.command. Throws UsageError.
CommandResult run_command(const RunConfig& config);

}  // namespace cstardyn::cli
