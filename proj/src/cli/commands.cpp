#include "ckgeo/cli/commands.hpp"

#include "ckgeo/ck_space.hpp"
#include "ckgeo/errors.hpp"
#include "ckgeo/json_io.hpp"
#include "ckgeo/kappa_trig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

namespace ckgeo::cli {

using json = nlohmann::ordered_json;

namespace {

json document(const RunConfig& config) { return {{"schema", kSchema}, {"config", to_json(config)}}; }

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string join(const std::vector<double>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + format_real(v[i]);
  return s;
}

std::string csv_cell(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

CKSignature signature_from(const RunConfig& config) {
  if (config.n < 1) throw UsageError("--n must be at least 1");
  std::vector<double> kappa = config.kappa;
  if (kappa.empty()) kappa.assign(static_cast<std::size_t>(config.n), 1.0);
  if (static_cast<int>(kappa.size()) != config.n) {
    std::ostringstream os;
    os << "--kappa has " << kappa.size() << " entries but --n is " << config.n;
    throw UsageError(os.str());
  }
  return CKSignature(config.n, kappa);
}

DeformationParams params_from(const RunConfig& config) {
  DeformationParams p;
  p.z = config.z;
  p.lambda2_sq = config.lambda2_sq;
  try {
    p.profile = Profile::by_name(config.profile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

/// A point of the N = 3 polar chart away from its coordinate singularities.
Point sample_polar_point(KappaPair kp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = 0.2 + 1.0 * unit(rng);
  const double theta = kp.kappa2 < 0 ? 0.1 + 1.4 * unit(rng) : 0.3 + 2.5 * unit(rng);
  const double phi = 0.1 + (2 * std::numbers::pi - 0.2) * unit(rng);
  Point x(3);
  x << r, theta, phi;
  return x;
}

Point sample_cartesian_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-0.8, 0.8);
  Point x(3);
  for (int i = 0; i < 3; ++i) x[i] = coord(rng);
  return x;
}

struct Deviation {
  double sectional = 0.0;
  double scalar = 0.0;
  bool undefined_plane = false;

  double max() const { return std::max(sectional, scalar); }
};

Deviation deviation(const CurvatureReport& r, double k_sectional, double k_scalar) {
  Deviation d;
  for (const auto& [plane, k] : r.sectional) {
    if (!k) {
      d.undefined_plane = true;
      continue;
    }
    d.sectional = std::max(d.sectional, std::abs(*k - k_sectional));
  }
  d.scalar = std::abs(r.scalar - k_scalar);
  return d;
}

std::string conformal_symbol(double z) {
  if (z == 1.0) return "cos r";
  if (z == -1.0) return "cosh r";
  return "C_z(r)";
}

}  // namespace

// ---------------------------------------------------------------------------

int cmd_algebra(const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance();
  auto check_passes = [tol](const AlgebraCheck& c, bool integral) {
    if (integral) return c.exact();
    return c.jacobi <= tol && c.invariance <= tol && c.representation <= tol && c.contraction <= tol;
  };

  if (config.sweep_signs) {
    if (config.n < 1 || config.n > 6) throw UsageError("--sweep-signs supports 1 <= n <= 6");
    if (!config.kappa.empty()) throw UsageError("--sweep-signs and --kappa are mutually exclusive");
    const auto rows = algebra_sweep(config.n, config.exec);
    const bool pass = std::all_of(rows.begin(), rows.end(), [&](const auto& c) { return check_passes(c, true); });
    if (config.output == OutputFormat::csv) {
      out << "kappa,name,jacobi,invariance,representation,contraction\n";
      for (const auto& c : rows) {
        out << join(c.kappa, " ") << ',' << c.name << ',' << format_real(c.jacobi) << ','
            << format_real(c.invariance) << ',' << format_real(c.representation) << ','
            << format_real(c.contraction) << '\n';
      }
    } else {
      json doc = document(config);
      json arr = json::array();
      for (const auto& c : rows) arr.push_back(to_json(c));
      doc["rows"] = arr;
      doc["count"] = rows.size();
      doc["pass"] = pass;
      emit_json(out, doc);
    }
    return pass ? kExitOk : kExitVerificationFailed;
  }

  const auto sig = signature_from(config);
  const auto check = check_algebra(sig);
  const bool pass = check_passes(check, sig.is_integral());
  if (config.output == OutputFormat::csv) {
    out << "m,dimension,rank,curvature_coefficient,isotropy\n";
    for (int m = 1; m <= sig.n(); ++m) {
      const auto s = space_report(sig, m);
      out << s.m << ',' << s.dimension << ',' << s.rank << ',' << format_real(s.curvature_coefficient) << ','
          << s.isotropy << '\n';
    }
  } else {
    json doc = document(config);
    json algebra = to_json(check);
    algebra["generators"] = sig.dimension();
    algebra["structure_constants"] = to_json(build_structure_constants(sig));
    json spaces = json::array();
    for (int m = 1; m <= sig.n(); ++m) {
      json s = to_json(space_report(sig, m));
      s["decomposition"] = to_json(cartan_decompose(sig, m));
      spaces.push_back(s);
    }
    algebra["spaces"] = spaces;
    doc["algebra"] = algebra;
    doc["pass"] = pass;
    emit_json(out, doc);
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_table2(const RunConfig& config, std::ostream& out) {
  if (config.samples < 1) throw UsageError("--samples must be positive");
  const double tol = config.tolerance();
  std::mt19937_64 rng(config.seed);
  bool all_pass = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "name,symbol,kappa1,kappa2,line_element,K_sectional,K_scalar,method,max_sectional_error,"
         "max_scalar_error,pass\n";

  for (const auto& entry : space_catalog()) {
    json row = to_json(entry);
    std::optional<Deviation> worst;
    if (!entry.degenerate) {
      std::vector<Point> points;
      for (int i = 0; i < config.samples; ++i) points.push_back(sample_polar_point(entry.kappa, rng));
      const auto reports = curvature_batch(metric_polar(entry.kappa, 3), points, config.exec);
      Deviation d;
      for (const auto& r : reports) {
        const auto e = deviation(r, entry.k_sectional, entry.k_scalar);
        d.sectional = std::max(d.sectional, e.sectional);
        d.scalar = std::max(d.scalar, e.scalar);
        d.undefined_plane = d.undefined_plane || e.undefined_plane;
      }
      worst = d;
    }
    const bool pass = !worst || (worst->max() <= tol && !worst->undefined_plane);
    all_pass = all_pass && pass;
    row["method"] = worst ? "finite-difference" : "closed-form";
    row["samples"] = worst ? config.samples : 0;
    row["max_sectional_error"] = worst ? json(worst->sectional) : json(nullptr);
    row["max_scalar_error"] = worst ? json(worst->scalar) : json(nullptr);
    row["pass"] = pass;
    rows.push_back(row);
    csv << entry.name << ',' << entry.symbol << ',' << format_real(entry.kappa.kappa1) << ','
        << format_real(entry.kappa.kappa2) << ",\"" << entry.line_element << "\"," << format_real(entry.k_sectional)
        << ',' << format_real(entry.k_scalar) << ',' << (worst ? "finite-difference" : "closed-form") << ','
        << (worst ? format_real(worst->sectional) : "") << ',' << (worst ? format_real(worst->scalar) : "") << ','
        << (pass ? "true" : "false") << '\n';
  }
  if (config.output == OutputFormat::csv) {
    out << csv.str();
  } else {
    json doc = document(config);
    doc["rows"] = rows;
    doc["pass"] = all_pass;
    emit_json(out, doc);
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_table3(const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance();
  for (double r : config.radii) {
    if (!(r > 0.0) || !(r < 0.5 * std::numbers::pi)) {
      throw UsageError("table3 radii must lie in (0, pi/2), the chart of the z = +1 rows");
    }
  }
  const std::pair<double, double> deformed[] = {{1, 1}, {-1, 1}, {1, 0}, {-1, 0}, {1, -1}, {-1, -1}};
  bool all_pass = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "name,symbol,z,lambda2_sq,r,K1j,K23,K,K12_fd,K13_fd,K23_fd,K_fd,max_error,pass\n";

  for (auto [z, l2] : deformed) {
    DeformationParams p;
    p.z = z;
    p.lambda2_sq = l2;
    const bool degenerate = l2 == 0.0;
    const std::string line = degenerate ? "(1/" + conformal_symbol(z) + ") dr^2"
                                        : "(1/" + conformal_symbol(z) + ") (" + line_element_symbolic({z, l2}) + ")";
    json row = {{"name", classify_deformed(p)},
                {"symbol", deformed_symbol(p)},
                {"z", z},
                {"lambda2_sq", l2},
                {"line_element", line},
                {"method", degenerate ? "closed-form" : "finite-difference"}};
    json samples = json::array();
    bool row_pass = true;
    for (double r : config.radii) {
      const auto cf = polar_curvature_closed_form(z, r);
      json s = {{"r", r}, {"K1j", cf.k12}, {"K23", cf.k23}, {"K", cf.scalar}};
      std::optional<CurvatureReport> fd;
      double err = 0.0;
      if (!degenerate) {
        Point y(3);
        y << r, l2 > 0 ? 0.9 : 0.6, 0.4;
        fd = curvature(deformed_metric_polar(p), y);
        for (const auto& [plane, k] : fd->sectional) {
          const double expected = plane.first == 0 ? cf.k12 : cf.k23;
          err = std::max(err, k ? std::abs(*k - expected) : std::numeric_limits<double>::infinity());
        }
        err = std::max(err, std::abs(fd->scalar - cf.scalar));
        s["finite_difference"] = to_json(*fd);
        s["max_error"] = err;
      }
      const bool pass = err <= tol;
      row_pass = row_pass && pass;
      s["pass"] = pass;
      samples.push_back(s);
      auto fd_k = [&](int i, int j) { return fd ? fd->sectional.at({i, j}) : std::optional<double>{}; };
      csv << classify_deformed(p) << ',' << deformed_symbol(p) << ',' << format_real(z) << ',' << format_real(l2)
          << ',' << format_real(r) << ',' << format_real(cf.k12) << ',' << format_real(cf.k23) << ','
          << format_real(cf.scalar) << ',' << csv_cell(fd_k(0, 1)) << ',' << csv_cell(fd_k(0, 2)) << ','
          << csv_cell(fd_k(1, 2)) << ',' << (fd ? format_real(fd->scalar) : "") << ','
          << (fd ? format_real(err) : "") << ',' << (pass ? "true" : "false") << '\n';
    }
    row["samples"] = samples;
    row["pass"] = row_pass;
    all_pass = all_pass && row_pass;
    rows.push_back(row);
  }

  json flat = json::array();
  for (double l2 : {1.0, 0.0, -1.0}) {
    DeformationParams p;
    p.z = 0.0;
    p.lambda2_sq = l2;
    flat.push_back({{"name", classify_deformed(p)},
                    {"symbol", deformed_symbol(p)},
                    {"z", 0.0},
                    {"lambda2_sq", l2},
                    {"note", "flat/non-deformed, see table2"}});
    csv << classify_deformed(p) << ',' << deformed_symbol(p) << ",0," << format_real(l2)
        << ",,,,,,,,,,flat/non-deformed see table2\n";
  }

  if (config.output == OutputFormat::csv) {
    out << csv.str();
  } else {
    json doc = document(config);
    doc["rows"] = rows;
    doc["flat_rows"] = flat;
    doc["pass"] = all_pass;
    emit_json(out, doc);
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_curvature(const RunConfig& config, std::ostream& out) {
  const double tol = config.tolerance();
  std::mt19937_64 rng(config.seed);

  std::optional<MetricField> metric;
  // Reference values at a point; nullopt entries are not checked.
  std::function<std::pair<std::optional<double>, std::optional<double>>(const Point&)> reference;
  std::function<Point()> sampler;
  bool degenerate = false;
  std::function<CurvatureReport(const Point&)> closed_form;

  if (config.metric == "ck") {
    KappaPair kp{1.0, 1.0};
    if (!config.kappa.empty()) {
      if (config.kappa.size() != 2) throw UsageError("--metric ck takes --kappa k1,k2");
      kp = {config.kappa[0], config.kappa[1]};
    }
    metric = metric_polar(kp, 3);
    degenerate = kp.kappa2 == 0.0;
    reference = [kp](const Point&) { return std::pair{std::optional(kp.kappa1), std::optional(6 * kp.kappa1)}; };
    closed_form = [kp](const Point& x) { return closed_form_report(x, 3, kp.kappa1, 6 * kp.kappa1); };
    sampler = [kp, &rng] { return sample_polar_point(kp, rng); };
  } else if (config.metric == "deformed-polar") {
    const auto p = params_from(config);
    metric = deformed_metric_polar(p);
    degenerate = p.lambda2_sq == 0.0;
    const std::string prof = p.profile.name;
    const double z = p.z;
    if (prof == "one") {
      reference = [z](const Point& x) {
        const auto cf = polar_curvature_closed_form(z, x[0]);
        return std::pair{std::optional<double>{}, std::optional(cf.scalar)};
      };
      closed_form = [z](const Point& x) {
        const auto cf = polar_curvature_closed_form(z, x[0]);
        CurvatureReport r;
        r.point = x;
        r.method = CurvatureMethod::closed_form;
        r.sectional = {{{0, 1}, cf.k12}, {{0, 2}, cf.k13}, {{1, 2}, cf.k23}};
        r.scalar = cf.scalar;
        return r;
      };
    } else if (prof == "ck" || prof == "exp") {
      reference = [z](const Point&) { return std::pair{std::optional(z), std::optional(6 * z)}; };
      closed_form = [z](const Point& x) { return closed_form_report(x, 3, z, 6 * z); };
    }
    sampler = [p, &rng] {
      Point x = sample_polar_point(p.kappa(), rng);
      if (p.z > 0) x[0] = std::min(x[0], 0.9 * 0.5 * std::numbers::pi / std::sqrt(p.z));
      return x;
    };
  } else if (config.metric == "deformed-cartesian") {
    const auto p = params_from(config);
    metric = deformed_metric_cartesian(p);
    const auto signs = chart_signs(p.lambda2_sq);
    reference = [p, signs](const Point& q) {
      double jm = 0.0;
      for (int i = 0; i < 3; ++i) jm += signs[static_cast<std::size_t>(i)] * q[i] * q[i];
      return std::pair{std::optional<double>{}, std::optional(scalar_curvature_formula(p, p.z * jm))};
    };
    sampler = [&rng] { return sample_cartesian_point(rng); };
  } else {
    throw UsageError("unknown --metric '" + config.metric + "' (expected ck, deformed-polar, deformed-cartesian)");
  }

  std::vector<Point> points;
  if (!config.point.empty()) {
    if (config.point.size() != 3) throw UsageError("--point takes three coordinates");
    points.push_back(Eigen::Map<const Eigen::VectorXd>(config.point.data(), 3));
  } else {
    if (config.samples < 1) throw UsageError("--samples must be positive");
    for (int i = 0; i < config.samples; ++i) points.push_back(sampler());
  }

  std::vector<CurvatureReport> reports;
  if (degenerate) {
    if (!closed_form) throw UsageError("degenerate metric without a closed-form curvature for this profile");
    for (const auto& x : points) reports.push_back(closed_form(x));
  } else {
    try {
      reports = curvature_batch(*metric, points, config.exec);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  bool all_pass = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "x1,x2,x3,K12,K13,K23,K,method,K_reference,max_error,pass\n";
  for (const auto& r : reports) {
    json row = to_json(r);
    double err = 0.0;
    std::optional<double> k_ref;
    if (reference && !degenerate) {
      const auto [ks, kk] = reference(r.point);
      k_ref = kk;
      if (ks) {
        for (const auto& [plane, k] : r.sectional)
          err = std::max(err, k ? std::abs(*k - *ks) : std::numeric_limits<double>::infinity());
      }
      if (kk) err = std::max(err, std::abs(r.scalar - *kk));
      row["reference_scalar"] = kk ? json(*kk) : json(nullptr);
      row["max_error"] = err;
    }
    const bool pass = err <= tol;
    all_pass = all_pass && pass;
    row["pass"] = pass;
    rows.push_back(row);
    csv << format_real(r.point[0]) << ',' << format_real(r.point[1]) << ',' << format_real(r.point[2]) << ','
        << csv_cell(r.sectional.at({0, 1})) << ',' << csv_cell(r.sectional.at({0, 2})) << ','
        << csv_cell(r.sectional.at({1, 2})) << ',' << format_real(r.scalar) << ','
        << (r.method == CurvatureMethod::closed_form ? "closed-form" : "finite-difference") << ','
        << csv_cell(k_ref) << ',' << format_real(err) << ',' << (pass ? "true" : "false") << '\n';
  }

  if (config.output == OutputFormat::csv) {
    out << csv.str();
  } else {
    json doc = document(config);
    doc["metric"] = metric->description();
    doc["reports"] = rows;
    doc["pass"] = all_pass;
    emit_json(out, doc);
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_geodesic(const RunConfig& config, std::ostream& out, std::ostream& summary_out) {
  const auto params = params_from(config);
  if (params.lambda2_sq == 0.0) {
    throw UsageError(
        "lambda2^2 = 0 gives a degenerate (Newton-Hooke/Galilean) metric: the geodesic Hamiltonian diverges and "
        "has no dynamical meaning");
  }
  if (!(config.dt > 0.0) || config.steps < 1 || config.every < 1) {
    throw UsageError("--dt must be positive, --steps and --every at least 1");
  }
  const bool lorentzian = params.lambda2_sq < 0;
  std::vector<double> y0 = config.point;
  if (y0.empty()) y0 = {0.6, lorentzian ? 0.7 : 0.9, 0.4};
  std::vector<double> p0 = config.momentum;
  if (p0.empty()) p0 = lorentzian ? std::vector<double>{0.03, 0.002, 0.002} : std::vector<double>{0.02, 0.015, 0.02};
  if (y0.size() != 3 || p0.size() != 3) throw UsageError("--point and --momentum take three values (r,theta,phi)");

  FlowState initial;
  initial.coords = Eigen::Map<const Eigen::VectorXd>(y0.data(), 3);
  initial.momenta = Eigen::Map<const Eigen::VectorXd>(p0.data(), 3);
  FlowOptions options;
  if (config.fourth_order) options.scheme = FlowScheme::composed_midpoint4;

  // Undeformed spaces are integrated in Cartesian q, where geodesics are straight lines.
  const bool flat = params.z == 0.0;
  const auto polar_guard = deformed_polar_guard(params);
  auto to_polar = [&](const FlowState& s) {
    if (!flat) return s;
    FlowState out = s;
    std::tie(out.coords, out.momenta) = flat_cartesian_to_polar(params.lambda2_sq, {s.coords, s.momenta});
    return out;
  };
  auto invariants = [&](const FlowState& s) {
    return flat ? cartesian_flow_invariants(params, {s.coords, s.momenta})
                : flow_invariants(params, s.coords, s.momenta);
  };

  FlowResult result;
  FlowInvariants inv0;
  try {
    if (flat) {
      if (!polar_guard(initial.coords)) throw DomainError("point outside the polar chart");
      const PhasePoint start = flat_polar_to_cartesian(params.lambda2_sq, initial.coords, initial.momenta);
      FlowState cart_initial;
      cart_initial.coords = start.q;
      cart_initial.momenta = start.p;
      options.domain_guard = [&](const Eigen::VectorXd& q) {
        try {
          return polar_guard(flat_cartesian_to_polar(params.lambda2_sq, {q, Eigen::Vector3d::Zero()}).first);
        } catch (const DomainError&) {
          return false;
        }
      };
      const Hamiltonian h = [&params](const Eigen::VectorXd& q, const Eigen::VectorXd& p) {
        return cartesian_geodesic_hamiltonian(params, {q, p});
      };
      result = geodesic_flow(h, cart_initial, config.dt, config.steps, options);
    } else {
      options.domain_guard = polar_guard;
      result = geodesic_flow(geodesic_hamiltonian(params), initial, config.dt, config.steps, options);
    }
    inv0 = invariants(result.states.front());
  } catch (const DomainError& e) {
    throw UsageError(std::string("initial state rejected: ") + e.what());
  }

  auto rel = [](double v, double v0) { return std::abs(v0) > 1e-300 ? std::abs(v - v0) / std::abs(v0) : std::abs(v); };
  double drift[5] = {0, 0, 0, 0, 0};
  std::string status = result.ok() ? "completed" : result.message;
  bool chart_ok = true;
  std::ostringstream csv;
  csv << "t,r,theta,phi,p_r,p_theta,p_phi,H,C2,C2_23,C3\n";
  json trajectory = json::array();
  const std::size_t last = result.states.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    FlowState s;
    FlowInvariants inv;
    try {
      s = to_polar(result.states[i]);
      inv = invariants(result.states[i]);
    } catch (const DomainError& e) {
      chart_ok = false;
      std::ostringstream os;
      os << "invariants undefined at t=" << format_real(result.states[i].time) << ": " << e.what();
      status = os.str();
      break;
    }
    const double vals[5] = {inv.hamiltonian, inv.casimir2_12, inv.casimir2_23, inv.casimir3, inv.p_phi};
    const double refs[5] = {inv0.hamiltonian, inv0.casimir2_12, inv0.casimir2_23, inv0.casimir3, inv0.p_phi};
    for (int k = 0; k < 5; ++k) drift[k] = std::max(drift[k], rel(vals[k], refs[k]));
    if (i % static_cast<std::size_t>(config.every) == 0 || i == last) {
      const std::vector<double> row{s.time,        s.coords[0],      s.coords[1],      s.coords[2],
                                    s.momenta[0],  s.momenta[1],     s.momenta[2],     inv.hamiltonian,
                                    inv.casimir2_12, inv.casimir2_23, inv.casimir3};
      csv << join(row, ",") << '\n';
      trajectory.push_back(row);
    }
  }
  const double tol = config.tolerance();
  const bool pass = result.ok() && chart_ok && std::all_of(std::begin(drift), std::end(drift), [tol](double d) {
                      return d <= tol;
                    });
  json summary = document(config);
  summary["space"] = classify_deformed(params);
  summary["symbol"] = deformed_symbol(params);
  summary["status"] = status;
  summary["steps_completed"] = last;
  summary["initial_invariants"] = to_json(inv0);
  summary["max_drift"] = {{"H", drift[0]}, {"C2", drift[1]}, {"C2_23", drift[2]}, {"C3", drift[3]}, {"p_phi", drift[4]}};
  summary["pass"] = pass;

  if (config.output == OutputFormat::csv) {
    out << csv.str();
    summary_out << summary.dump(2) << '\n';
  } else {
    summary["columns"] = {"t", "r", "theta", "phi", "p_r", "p_theta", "p_phi", "H", "C2", "C2_23", "C3"};
    summary["trajectory"] = trajectory;
    emit_json(out, summary);
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_contract(const RunConfig& config, std::ostream& out) {
  const auto sig = signature_from(config);
  if (config.m < 1 || config.m > sig.n()) throw UsageError("--m must lie in [1, n]");
  if (config.eps_points < 2) throw UsageError("--eps-points must be at least 2");
  const double tol = config.tolerance();

  const auto sc = build_structure_constants(sig);
  const auto target = build_structure_constants(sig.with_kappa(config.m, 0.0));
  std::vector<double> eps(static_cast<std::size_t>(config.eps_points));
  for (int i = 0; i < config.eps_points; ++i) eps[static_cast<std::size_t>(i)] = std::pow(10.0, -6.0 * i / (config.eps_points - 1));
  const auto dist = map_indexed<double>(eps.size(), config.exec, [&](std::size_t i) {
    return contract_gamma(sc, config.m, eps[i]).distance(target);
  });

  bool monotone = true;
  for (std::size_t i = 1; i < dist.size(); ++i) {
    if (dist[i - 1] > 0.0 ? !(dist[i] < dist[i - 1]) : dist[i] != 0.0) monotone = false;
  }
  const double limit = contract_gamma(sc, config.m, 0.0).distance(target);
  const bool converges = dist.back() <= tol * std::max(1.0, dist.front());

  StructureConstants flag = sc;
  for (int m = 1; m <= sig.n(); ++m) flag = contract_gamma(flag, m, 0.0);
  const double flag_distance = flag.distance(build_structure_constants(CKSignature(std::vector<double>(sig.n(), 0.0))));
  const bool pass = monotone && converges && limit == 0.0 && flag_distance == 0.0;

  if (config.output == OutputFormat::csv) {
    out << "eps,distance\n";
    for (std::size_t i = 0; i < eps.size(); ++i) out << format_real(eps[i]) << ',' << format_real(dist[i]) << '\n';
    out << "0," << format_real(limit) << '\n';
  } else {
    json doc = document(config);
    doc["algebra"] = classify_algebra(sig);
    doc["target"] = classify_algebra(sig.with_kappa(config.m, 0.0));
    json series = json::array();
    for (std::size_t i = 0; i < eps.size(); ++i) series.push_back({{"eps", eps[i]}, {"distance", dist[i]}});
    doc["series"] = series;
    doc["limit_distance"] = limit;
    doc["monotone"] = monotone;
    doc["flag_distance"] = flag_distance;
    doc["pass"] = pass;
    emit_json(out, doc);
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

int run_command(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  switch (config.command) {
    case Command::algebra: return cmd_algebra(config, out);
    case Command::table2: return cmd_table2(config, out);
    case Command::table3: return cmd_table3(config, out);
    case Command::curvature: return cmd_curvature(config, out);
    case Command::geodesic: return cmd_geodesic(config, out, summary);
    case Command::contract: return cmd_contract(config, out);
  }
  throw UsageError("unknown command");
}

}  // namespace ckgeo::cli
