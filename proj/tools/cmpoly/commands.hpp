#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cmpoly/exactalg/qmatrix.hpp"

namespace cmpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRationalOnly = 2,
  kBoundExceeded = 3,
  kToleranceFailure = 4,
};

struct RunConfig {
  std::string space;
  std::uint64_t seed = 42;
  std::size_t samples = 64;
  std::optional<int> max_k;
  std::string verify = "exact";  ///< exact | sampled
  int max_order = 4;             ///< jets command
  std::optional<QVector> direction;
  double h = 1e-3;               ///< integration step
  double h_fd = 1e-2;            ///< base finite-difference step
  double t_end = 1.0;
  double tolerance = 1e-5;
  double killing_tolerance = 1e-8;
  int fd_order = 3;
  std::string out;
  bool timestamp = true;
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::json record;
  std::string summary;  ///< one or two human-readable lines
};

/// Seed from CMPOLY_SEED when set, else 42. Throws UsageError on bad values.
std::uint64_t default_seed();

/// "a,b,c" with rational components.
QVector parse_direction(const std::string& text);

CommandResult cmd_catalog();
CommandResult cmd_jets(const RunConfig& cfg);
CommandResult cmd_minpoly(const RunConfig& cfg);
CommandResult cmd_pointwise(const RunConfig& cfg);
CommandResult cmd_singer(const RunConfig& cfg);
CommandResult cmd_crosscheck(const RunConfig& cfg);
CommandResult cmd_all(const RunConfig& cfg);

/// Parses argv, runs the command, writes the record, returns the exit code.
int run(int argc, char** argv);

}  // namespace cmpoly::cli
