#include "ckgeo/cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace ckgeo::cli {

double RunConfig::tolerance() const { return tol ? *tol : default_tolerance(command); }

std::string command_name(Command c) {
  switch (c) {
    case Command::algebra: return "algebra";
    case Command::table2: return "table2";
    case Command::table3: return "table3";
    case Command::curvature: return "curvature";
    case Command::geodesic: return "geodesic";
    case Command::contract: return "contract";
  }
  return "unknown";
}

Command parse_command(const std::string& name) {
  for (auto c : {Command::algebra, Command::table2, Command::table3, Command::curvature, Command::geodesic,
                 Command::contract}) {
    if (command_name(c) == name) return c;
  }
  throw UsageError("unknown command '" + name + "'");
}

double default_tolerance(Command c) {
  switch (c) {
    case Command::algebra: return 1e-12;
    case Command::table2: return 1e-6;
    case Command::table3: return 1e-5;
    case Command::curvature: return 1e-5;
    case Command::geodesic: return 1e-7;
    case Command::contract: return 1e-10;
  }
  return 1e-8;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    const std::string token = item.substr(first, last - first + 1);
    double v = 0.0;
    const auto* begin = token.data();
    const auto* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      throw UsageError("'" + token + "' is not a real number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("expected a comma-separated list of reals");
  return out;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j = {{"command", command_name(c.command)},
                              {"output", c.output == OutputFormat::json ? "json" : "csv"},
                              {"seed", c.seed},
                              {"prng", "mt19937_64"},
                              {"tol", c.tolerance()}};
  switch (c.command) {
    case Command::algebra:
      j["n"] = c.n;
      j["kappa"] = c.kappa;
      j["sweep_signs"] = c.sweep_signs;
      break;
    case Command::contract:
      j["n"] = c.n;
      j["kappa"] = c.kappa;
      j["m"] = c.m;
      j["eps_points"] = c.eps_points;
      break;
    case Command::table2:
      j["samples"] = c.samples;
      break;
    case Command::table3:
      j["radii"] = c.radii;
      break;
    case Command::curvature:
      j["metric"] = c.metric;
      j["kappa"] = c.kappa;
      j["z"] = c.z;
      j["lambda2_sq"] = c.lambda2_sq;
      j["profile"] = c.profile;
      j["point"] = c.point;
      j["samples"] = c.samples;
      break;
    case Command::geodesic:
      j["z"] = c.z;
      j["lambda2_sq"] = c.lambda2_sq;
      j["profile"] = c.profile;
      j["point"] = c.point;
      j["momentum"] = c.momentum;
      j["dt"] = c.dt;
      j["steps"] = c.steps;
      j["every"] = c.every;
      j["scheme"] = c.fourth_order ? "composed-midpoint-4" : "implicit-midpoint";
      break;
  }
  return j;
}

}  // namespace ckgeo::cli
