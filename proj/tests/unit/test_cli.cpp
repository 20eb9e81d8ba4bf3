#include "ckgeo/cli/commands.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace ckgeo::cli;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string summary;
  json doc() const { return json::parse(out); }
};

Run run(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream summary;
  Run r;
  r.code = run_command(config, out, summary);
  r.out = out.str();
  r.summary = summary.str();
  return r;
}

RunConfig make(Command c) {
  RunConfig config;
  config.command = c;
  return config;
}

int tool(const std::string& args) {
  const std::string cmd = std::string(CKGEO_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("real-number lists") {
  CHECK(parse_reals("1,-1, 0.5") == std::vector<double>{1.0, -1.0, 0.5});
  CHECK(parse_reals("1e-3") == std::vector<double>{1e-3});
  CHECK_THROWS_AS(parse_reals("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_reals("1,abc"), UsageError);
  CHECK_THROWS_AS(parse_reals("0x10"), UsageError);
  CHECK_THROWS_AS(parse_reals("inf"), UsageError);
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(-2.5e-12) == "-2.5e-12");
  CHECK(format_real(3.0) == "3");
}

TEST_CASE("commands and defaults") {
  CHECK(parse_command("table3") == Command::table3);
  CHECK_THROWS_AS(parse_command("plot"), UsageError);
  CHECK(default_tolerance(Command::table2) == 1e-6);
  CHECK(default_tolerance(Command::geodesic) == 1e-7);
  RunConfig config = make(Command::table3);
  CHECK(config.tolerance() == 1e-5);
  config.tol = 1e-3;
  CHECK(config.tolerance() == 1e-3);
  const auto j = to_json(config);
  CHECK(j["prng"] == "mt19937_64");
  CHECK(j["seed"] == 20240611u);
  CHECK(j["radii"] == json::array({0.3, 0.7, 1.1}));
}

TEST_CASE("algebra command") {
  auto config = make(Command::algebra);
  config.kappa = {1, 1, 1};
  auto r = run(config);
  CHECK(r.code == kExitOk);
  auto doc = r.doc();
  CHECK(doc.begin().key() == "schema");
  CHECK(doc["schema"] == "ckgeo/1");
  CHECK(doc["algebra"]["name"] == "so(4)");
  CHECK(doc["algebra"]["jacobi"] == 0.0);
  CHECK(doc["algebra"]["spaces"].size() == 3);

  config.kappa = {0, -1, 1};
  CHECK(run(config).doc()["algebra"]["name"] == "iso(2,1)");

  config.kappa = {1, 1};
  CHECK_THROWS_AS(run(config), UsageError);

  config.kappa.clear();
  config.n = 4;
  config.sweep_signs = true;
  doc = run(config).doc();
  CHECK(doc["rows"].size() == 81);
  for (const auto& row : doc["rows"]) CHECK(row["jacobi"] == 0.0);
}

TEST_CASE("table commands") {
  auto t2 = make(Command::table2);
  t2.samples = 4;
  auto r = run(t2);
  CHECK(r.code == kExitOk);
  auto rows = r.doc()["rows"];
  REQUIRE(rows.size() == 9);
  CHECK(rows[0]["name"] == "spherical");
  CHECK(rows[0]["K_sectional"] == 1.0);
  CHECK(rows[0]["K_scalar"] == 6.0);
  CHECK(rows[3]["method"] == "closed-form");

  auto r3 = run(make(Command::table3));
  CHECK(r3.code == kExitOk);
  const auto doc = r3.doc();
  REQUIRE(doc["rows"].size() == 6);
  const auto& ads = doc["rows"][4];
  CHECK(ads["name"] == "deformed-anti-de-sitter");
  const double expected = -2.5 * std::pow(std::sin(0.7), 2) / std::cos(0.7);
  CHECK(ads["samples"][1]["K"].get<double>() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(std::abs(ads["samples"][1]["finite_difference"]["scalar"].get<double>() - expected) < 1e-5);
  for (const auto& flat : doc["flat_rows"]) CHECK(flat["note"] == "flat/non-deformed, see table2");

  auto bad = make(Command::table3);
  bad.radii = {1.7};
  CHECK_THROWS_AS(run(bad), UsageError);
}

TEST_CASE("a tolerance that cannot be met fails verification") {
  auto t2 = make(Command::table2);
  t2.samples = 2;
  t2.tol = 1e-16;
  CHECK(run(t2).code == kExitVerificationFailed);
}

TEST_CASE("curvature command") {
  auto config = make(Command::curvature);
  config.metric = "deformed-cartesian";
  config.z = 0.1;
  config.point = {0.3, 0.4, 0.5};
  auto r = run(config);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("-0.0250104") != std::string::npos);
  config.metric = "parabolic";
  CHECK_THROWS_AS(run(config), UsageError);
}

TEST_CASE("geodesic command") {
  auto config = make(Command::geodesic);
  auto r = run(config);
  CHECK(r.code == kExitOk);
  const auto doc = r.doc();
  CHECK(doc["space"] == "deformed-sphere");
  for (const auto& [key, value] : doc["max_drift"].items()) {
    CAPTURE(key);
    CHECK(value.get<double>() < 1e-7);
  }

  config.z = 0.0;
  r = run(config);
  CHECK(r.code == kExitOk);
  CHECK(r.doc()["max_drift"]["H"].get<double>() < 1e-12);

  config.output = OutputFormat::csv;
  config.z = 1.0;
  config.steps = 50;
  config.every = 10;
  r = run(config);
  CHECK(r.out.rfind("t,r,theta,phi,p_r,p_theta,p_phi,H,C2,C2_23,C3\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
  CHECK(json::parse(r.summary)["pass"] == true);

  config.lambda2_sq = 0.0;
  CHECK_THROWS_WITH_AS(run(config), doctest::Contains("degenerate"), UsageError);
}

TEST_CASE("contract command") {
  auto config = make(Command::contract);
  auto r = run(config);
  CHECK(r.code == kExitOk);
  const auto doc = r.doc();
  CHECK(doc["algebra"] == "so(4)");
  CHECK(doc["target"] == "iso(3)");
  CHECK(doc["monotone"] == true);
  CHECK(doc["limit_distance"] == 0.0);
  CHECK(doc["flag_distance"] == 0.0);
  const auto& series = doc["series"];
  CHECK(series[0]["distance"] == 1.0);
  for (const auto& s : series) {
    const double eps = s["eps"].get<double>();
    CHECK(s["distance"].get<double>() == doctest::Approx(eps * eps).epsilon(1e-12));
  }
  config.m = 5;
  CHECK_THROWS_AS(run(config), UsageError);
}

TEST_CASE("identical configurations give identical bytes") {
  auto config = make(Command::table2);
  config.samples = 3;
  const auto a = run(config).out;
  config.exec = ckgeo::Execution::serial;
  CHECK(run(config).out == a);
  config.seed = 7;
  CHECK(run(config).out != a);
}

TEST_CASE("exit codes of the executable") {
  CHECK(tool("algebra --n 3 --kappa 1,1,1") == kExitOk);
  CHECK(tool("table2 --samples 2 --tol 1e-16") == kExitVerificationFailed);
  CHECK(tool("algebra --kappa 1,x") == kExitUsage);
  CHECK(tool("levitate") == kExitUsage);
  CHECK(tool("geodesic --lambda2 0") == kExitUsage);
  CHECK(tool("--output xml algebra") == kExitUsage);
  CHECK(tool("--help") == kExitOk);
}
