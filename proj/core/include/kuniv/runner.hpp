#pragma once

// Executes a RunConfig and renders the JSON report and CSV curve files.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kuniv/config.hpp"

namespace kuniv {

enum class RunMode {
  Classify,  // classification only
  Probe,     // the configured probe actions only
  Report,    // every configured action in order
};

struct RunOptions {
  RunMode mode = RunMode::Report;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> grid;  // overrides evaluation grids of the sweep probes
};

struct OutputFile {
  std::string name;  // relative to the output directory
  std::string content;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 2 threshold failure, 1 error
  std::vector<OutputFile> files;
  std::vector<std::string> summary;  // human-readable lines
  std::string error;                 // set when exit_code == 1
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitThreshold = 2;

/// Never throws for inner-module errors; they become exit code 1 with the
/// module-tagged message in the report.
RunResult run(const RunConfig& cfg, const RunOptions& options = {});

/// Writes files under dir, creating it if needed. Throws Io on failure.
void write_outputs(const RunResult& result, const std::string& dir);

}  // namespace kuniv
