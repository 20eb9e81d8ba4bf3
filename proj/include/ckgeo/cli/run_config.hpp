#pragma once

#include "ckgeo/sweep.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckgeo::cli {

enum class Command { algebra, table2, table3, curvature, geodesic, contract };
enum class OutputFormat { json, csv };

/// Invalid command-line input; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::algebra;
  OutputFormat output = OutputFormat::json;
  std::uint64_t seed = 20240611;
  /// Per-command default when unset (see default_tolerance).
  std::optional<double> tol;
  Execution exec = Execution::parallel;

  // algebra / contract
  int n = 3;
  std::vector<double> kappa;  // empty: all +1
  bool sweep_signs = false;
  int m = 1;
  int eps_points = 13;

  // curvature / table2 / table3
  std::string metric = "ck";  // ck | deformed-polar | deformed-cartesian
  std::vector<double> point;  // empty: sample `samples` points
  int samples = 20;
  std::vector<double> radii{0.3, 0.7, 1.1};

  // qdeform
  double z = 1.0;
  double lambda2_sq = 1.0;
  std::string profile = "one";

  // geodesic
  double dt = 1e-3;
  int steps = 10000;
  int every = 100;
  std::vector<double> momentum;  // empty: defaults per signature
  bool fourth_order = false;

  double tolerance() const;
};

std::string command_name(Command c);
Command parse_command(const std::string& name);
double default_tolerance(Command c);

/// Comma-separated reals, e.g. "1,-1,0.5". Throws UsageError on malformed input.
std::vector<double> parse_reals(const std::string& text);

/// Shortest round-trip decimal form, '.' separator, independent of locale.
std::string format_real(double x);

nlohmann::ordered_json to_json(const RunConfig& config);

}  // namespace ckgeo::cli
