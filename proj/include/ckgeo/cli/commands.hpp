#pragma once

#include "ckgeo/cli/run_config.hpp"

#include <iosfwd>
#include <string>

namespace ckgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command, writing the report to `out` (and, for geodesic in CSV
/// mode, the summary to `summary`). Returns kExitOk or kExitVerificationFailed;
/// throws UsageError for invalid configurations.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& summary);

int cmd_algebra(const RunConfig& config, std::ostream& out);
int cmd_table2(const RunConfig& config, std::ostream& out);
int cmd_table3(const RunConfig& config, std::ostream& out);
int cmd_curvature(const RunConfig& config, std::ostream& out);
int cmd_geodesic(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_contract(const RunConfig& config, std::ostream& out);

}  // namespace ckgeo::cli
