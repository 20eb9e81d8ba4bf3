#include "ckgeo/cli/commands.hpp"
#include "ckgeo/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ckgeo::cli;

namespace {

struct ListOption {
  std::string text;
  std::vector<double>* target;
};

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  std::string output = "json";
  double tol = 0.0;
  bool serial = false;
  std::string summary_path;
  std::vector<ListOption> lists;

  CLI::App app{"Cayley-Klein geometry engine: algebras, curvature tables, deformed spaces and geodesic flows"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", config.seed, "Seed of the mt19937_64 sampler");
  auto* tol_opt = app.add_option("--tol", tol, "Verification tolerance (per-command default when omitted)");
  app.add_flag("--serial", serial, "Use the serial reference kernels instead of OpenMP");

  auto add_list = [&](CLI::App* sub, const std::string& name, std::vector<double>* target, const std::string& help) {
    lists.push_back({"", target});
    auto* text = &lists.back().text;
    return sub->add_option(name, *text, help + " (comma-separated reals)");
  };
  lists.reserve(16);

  auto* algebra = app.add_subcommand("algebra", "Structure constants, classification and checks of so_kappa(N+1)");
  algebra->add_option("--n", config.n, "N");
  add_list(algebra, "--kappa", &config.kappa, "kappa_1..kappa_N (default all 1)");
  algebra->add_flag("--sweep-signs", config.sweep_signs, "Check all 3^N sign vectors");

  auto* table2 = app.add_subcommand("table2", "The nine 3D Cayley-Klein spaces with verified curvatures");
  table2->add_option("--samples", config.samples, "Random chart points per space");

  auto* table3 = app.add_subcommand("table3", "The six deformed 3D spaces (g = 1) with verified curvatures");
  add_list(table3, "--r", &config.radii, "Radii");

  auto* curv = app.add_subcommand("curvature", "Sectional and scalar curvature of a metric");
  curv->add_option("--metric", config.metric, "ck | deformed-polar | deformed-cartesian");
  add_list(curv, "--kappa", &config.kappa, "k1,k2 for --metric ck");
  curv->add_option("--z", config.z, "Deformation parameter z");
  curv->add_option("--lambda2", config.lambda2_sq, "lambda2^2");
  curv->add_option("--profile", config.profile, "one | ck | exp | poly2");
  add_list(curv, "--point", &config.point, "Coordinates of a single point");
  curv->add_option("--samples", config.samples, "Random points when --point is omitted");

  auto* geo = app.add_subcommand("geodesic", "Integrate the geodesic flow of a deformed space");
  geo->add_option("--z", config.z, "Deformation parameter z");
  geo->add_option("--lambda2", config.lambda2_sq, "lambda2^2 (nonzero)");
  geo->add_option("--profile", config.profile, "one | ck | exp | poly2");
  add_list(geo, "--point", &config.point, "Initial r,theta,phi");
  add_list(geo, "--momentum", &config.momentum, "Initial p_r,p_theta,p_phi");
  geo->add_option("--dt", config.dt, "Time step");
  geo->add_option("--steps", config.steps, "Number of steps");
  geo->add_option("--every", config.every, "Output stride in steps");
  geo->add_flag("--fourth-order", config.fourth_order, "Triple-jump composition of midpoint steps");
  geo->add_option("--summary", summary_path, "Write the summary JSON here (CSV mode; default stderr)");

  auto* contract = app.add_subcommand("contract", "Contraction distance series for eps from 1 to 1e-6");
  contract->add_option("--n", config.n, "N");
  add_list(contract, "--kappa", &config.kappa, "kappa_1..kappa_N (default all 1)");
  contract->add_option("--m", config.m, "Contracted index m");
  contract->add_option("--eps-points", config.eps_points, "Number of logarithmically spaced eps values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto& l : lists) {
      if (!l.text.empty()) *l.target = parse_reals(l.text);
    }
    config.command = parse_command(app.get_subcommands().front()->get_name());
    config.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (*tol_opt) {
      if (!(tol >= 0.0)) throw UsageError("--tol must be non-negative");
      config.tol = tol;
    }
    config.exec = serial ? ckgeo::Execution::serial : ckgeo::Execution::parallel;

    if (!summary_path.empty()) {
      std::ofstream summary(summary_path);
      if (!summary) throw UsageError("cannot open " + summary_path);
      return run_command(config, std::cout, summary);
    }
    return run_command(config, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}
