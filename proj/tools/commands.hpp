#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shiftclass/oracle.hpp"

namespace shiftclass::cli {

enum class Command { compute, table, matrix, graph, solve, verify };
enum class Format { text, json, csv, dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Name of the environment variable overriding the default oracle bound.
inline constexpr const char* kBoundEnv = "SHIFTCLASS_ORACLE_BOUND";

struct CliConfig {
  Command command = Command::compute;
  std::vector<std::int64_t> args;  // positional integers of the subcommand
  Format format = Format::text;
  std::int64_t oracle_bound = kDefaultOracleBound;
  std::uint64_t seed = kDefaultOracleSeed;
  std::string output;  // empty: standard output
};

/// Runs an already-parsed command; returns the process exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors return kExitUsage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shiftclass::cli
