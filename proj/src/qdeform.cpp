#include "ckgeo/qdeform.hpp"

#include "ckgeo/errors.hpp"
#include "ckgeo/kappa_trig.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ckgeo {

// ---------------------------------------------------------------------------
// Profiles

double Profile::first(double x) const {
  if (df) return df(x);
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double Profile::second(double x) const {
  if (d2f) return d2f(x);
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

Profile Profile::one() {
  return {"one", [](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
}

Profile Profile::exponential() {
  auto e = [](double x) { return std::exp(x); };
  return {"exp", e, e, e};
}

Profile Profile::poly2() {
  return {"poly2", [](double x) { return 1.0 + 0.5 * x * x; }, [](double x) { return x; },
          [](double) { return 1.0; }};
}

Profile Profile::custom(std::string name, std::function<double(double)> f) {
  return {std::move(name), std::move(f), {}, {}};
}

Profile Profile::by_name(const std::string& name) {
  if (name == "one") return one();
  if (name == "exp") return exponential();
  if (name == "ck") {
    auto p = exponential();
    p.name = "ck";
    return p;
  }
  if (name == "poly2") return poly2();
  throw std::invalid_argument("unknown profile '" + name + "' (expected one, ck, exp, poly2)");
}

// ---------------------------------------------------------------------------
// Realizations and brackets

namespace {

int sign_at(const std::vector<int>& signs, Eigen::Index i) {
  return signs.empty() ? 1 : signs.at(static_cast<std::size_t>(i));
}

// sinhc(z w_i) exp(-z sum_{j<i} w_j + z sum_{j>i} w_j) for every site.
Eigen::VectorXd site_prefactors(double z, const Eigen::VectorXd& w) {
  const auto n = w.size();
  Eigen::VectorXd out(n);
  const double total = w.sum();
  double left = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double right = total - left - w[i];
    out[i] = sinhc(z * w[i]) * std::exp(z * (right - left));
    left += w[i];
  }
  return out;
}

Eigen::VectorXd signed_squares(const Eigen::VectorXd& q, const std::vector<int>& signs) {
  Eigen::VectorXd w(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) w[i] = sign_at(signs, i) * q[i] * q[i];
  return w;
}

}  // namespace

GeneratorTriple realization(double z, const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                            const std::vector<int>& signs) {
  if (q.size() != p.size() || q.size() == 0) throw std::invalid_argument("realization needs matching q, p");
  if (!signs.empty() && static_cast<Eigen::Index>(signs.size()) != q.size()) {
    throw std::invalid_argument("realization: one sign per site required");
  }
  const Eigen::VectorXd w = signed_squares(q, signs);
  const Eigen::VectorXd b = site_prefactors(z, w);
  GeneratorTriple j;
  j.j_minus = w.sum();
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    j.j_plus += sign_at(signs, i) * b[i] * p[i] * p[i];
    j.j_three += b[i] * q[i] * p[i];
  }
  return j;
}

GeneratorTriple realization(const DeformationParams& params, int n_sites, const PhasePoint& pt) {
  if (n_sites < 1) throw std::invalid_argument("realization requires n_sites >= 1");
  if (pt.q.size() != n_sites || pt.p.size() != n_sites) {
    throw std::invalid_argument("phase point does not have n_sites coordinates");
  }
  return realization(params.z, pt.q, pt.p);
}

double casimir_value(double z, const GeneratorTriple& j) {
  // sinh(z J-)/z = J- sinhc(z J-), finite at z = 0.
  return j.j_minus * sinhc(z * j.j_minus) * j.j_plus - j.j_three * j.j_three;
}

double casimir(const DeformationParams& params, int n_sites, const PhasePoint& pt) {
  return casimir_value(params.z, realization(params, n_sites, pt));
}

double casimir_block(double z, const PhasePoint& pt, int first, int count, const std::vector<int>& signs) {
  if (first < 0 || count < 1 || first + count > pt.q.size()) throw IndexError("casimir_block: site range out of bounds");
  std::vector<int> block_signs;
  if (!signs.empty()) block_signs.assign(signs.begin() + first, signs.begin() + first + count);
  return casimir_value(z, realization(z, pt.q.segment(first, count), pt.p.segment(first, count), block_signs));
}

double casimir2_closed_form(double z, double q1, double q2, double p1, double p2) {
  const double l = q1 * p2 - q2 * p1;
  return sinhc(z * q1 * q1) * sinhc(z * q2 * q2) * std::exp(-z * q1 * q1) * std::exp(z * q2 * q2) * l * l;
}

double canonical_poisson(const PhaseFunction& fa, const PhaseFunction& fb, const PhasePoint& pt,
                         double relative_step) {
  constexpr double kOffsets[] = {-2, -1, 1, 2};
  constexpr double kWeights[] = {1, -8, 8, -1};
  PhasePoint y = pt;
  auto partial = [&](const PhaseFunction& f, Eigen::VectorXd& var, Eigen::Index i) {
    const double x0 = var[i];
    const double h = relative_step * std::max(1.0, std::abs(x0));
    double acc = 0.0;
    for (int s = 0; s < 4; ++s) {
      var[i] = x0 + kOffsets[s] * h;
      acc += kWeights[s] * f(y);
    }
    var[i] = x0;
    return acc / (12.0 * h);
  };
  double sum = 0.0;
  for (Eigen::Index i = 0; i < pt.q.size(); ++i) {
    const double a_q = partial(fa, y.q, i);
    const double a_p = partial(fa, y.p, i);
    const double b_q = partial(fb, y.q, i);
    const double b_p = partial(fb, y.p, i);
    sum += a_q * b_p - b_q * a_p;
  }
  return sum;
}

double BracketResiduals::max() const {
  return std::max({j3_jplus, j3_jminus, jminus_jplus, casimir_central});
}

BracketResiduals bracket_residuals(double z, const PhasePoint& pt, const std::vector<int>& signs) {
  auto gen = [z, &signs](const PhasePoint& x) { return realization(z, x.q, x.p, signs); };
  const PhaseFunction jm = [&](const PhasePoint& x) { return gen(x).j_minus; };
  const PhaseFunction jp = [&](const PhasePoint& x) { return gen(x).j_plus; };
  const PhaseFunction j3 = [&](const PhasePoint& x) { return gen(x).j_three; };
  const PhaseFunction c = [&](const PhasePoint& x) { return casimir_value(z, gen(x)); };

  const auto j = gen(pt);
  BracketResiduals r;
  r.j3_jplus = std::abs(canonical_poisson(j3, jp, pt) - 2.0 * j.j_plus * std::cosh(z * j.j_minus));
  r.j3_jminus = std::abs(canonical_poisson(j3, jm, pt) + 2.0 * j.j_minus * sinhc(z * j.j_minus));
  r.jminus_jplus = std::abs(canonical_poisson(jm, jp, pt) - 4.0 * j.j_three);
  r.casimir_central = std::max({std::abs(canonical_poisson(c, jm, pt)), std::abs(canonical_poisson(c, jp, pt)),
                                std::abs(canonical_poisson(c, j3, pt))});
  return r;
}

// ---------------------------------------------------------------------------
// Cartesian metric and curvature formulas

std::vector<int> chart_signs(double lambda2_sq) {
  if (lambda2_sq < 0) return {-1, -1, 1};
  return {1, 1, 1};
}

MetricField deformed_metric_cartesian(const DeformationParams& params, Normalization norm) {
  const auto signs = chart_signs(params.lambda2_sq);
  const double scale = norm == Normalization::printed ? 2.0 : 1.0;
  const double z = params.z;
  const Profile profile = params.profile;
  auto eval = [signs, scale, z, profile](const Point& q) {
    const Eigen::VectorXd w = signed_squares(q, signs);
    const Eigen::VectorXd b = site_prefactors(z, w);
    const double f = profile.value(z * w.sum());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
    for (int i = 0; i < 3; ++i) g(i, i) = scale * signs[i] / (b[i] * f);
    return g;
  };
  auto guard = [signs, z, profile](const Point& q) {
    return q.size() == 3 && q.allFinite() && profile.value(z * signed_squares(q, signs).sum()) > 0.0;
  };
  std::ostringstream desc;
  desc << "deformed-cartesian(z=" << z << ", lambda2^2=" << params.lambda2_sq << ", f=" << profile.name << ")";
  return MetricField(3, eval, guard, false, desc.str());
}

double scalar_curvature_formula(const DeformationParams& params, double x) {
  const double f = params.profile.value(x);
  if (f == 0.0) throw DomainError("scalar_curvature_formula: f(x) vanishes");
  const double f1 = params.profile.first(x);
  const double f2 = params.profile.second(x);
  return params.z * (6.0 * f1 * std::cosh(x) + (4.0 * f2 - 5.0 * f - 5.0 * f1 * f1 / f) * std::sinh(x));
}

CurvatureTriple cartesian_curvature_closed_form(double z, const Eigen::Vector3d& q) {
  const double x = z * q.squaredNorm();
  const double e3 = std::exp(2 * z * q[2] * q[2]);
  const double e23 = std::exp(2 * z * (q[1] * q[1] + q[2] * q[2]));
  const double e123 = std::exp(2 * x);
  const double pre = 0.25 * z * std::exp(-x);
  CurvatureTriple k;
  k.k12 = pre * (1.0 + e3 - 2.0 * e123);
  k.k13 = pre * (2.0 - e3 + e23 - 2.0 * e123);
  k.k23 = pre * (2.0 - e23 - e123);
  k.scalar = -5.0 * z * std::sinh(x);
  return k;
}

CurvatureTriple polar_curvature_closed_form(double z, double r) {
  const double s = ck_sin(z, r);
  const double c = ck_cos(z, r);
  CurvatureTriple k;
  k.k12 = -0.5 * z * z * s * s / c;
  k.k13 = k.k12;
  k.k23 = 0.5 * k.k12;
  k.scalar = 5.0 * k.k12;
  return k;
}

// ---------------------------------------------------------------------------
// Polar-type coordinates

namespace {

void require_polar(const DeformationParams& params) {
  if (params.lambda2_sq == 0.0) {
    throw DomainError("polar change is singular for lambda2^2 = 0 (degenerate Newtonian metric)");
  }
}

}  // namespace

GeodesicPolarCoords polar_change(const DeformationParams& params, const Eigen::Vector3d& q) {
  require_polar(params);
  const double z = params.z;
  const double k2 = params.lambda2_sq;
  const Eigen::VectorXd w = signed_squares(q, chart_signs(k2));
  // u_i = (right-hand side of the i-th relation) / z, finite as z -> 0.
  const double u1 = expm1_over(z, 2 * w[0]);
  const double u2 = std::exp(2 * z * w[0]) * expm1_over(z, 2 * w[1]);
  const double u3 = std::exp(2 * z * (w[0] + w[1])) * expm1_over(z, 2 * w[2]);
  const double transverse = u1 + u2;
  const double total = transverse + u3;
  if (!(total >= 0.0)) throw DomainError("polar change: point outside the chart");

  GeodesicPolarCoords c;
  c.r = ck_arctan(z, std::sqrt(total));
  if (k2 > 0) {
    c.theta = std::atan2(std::sqrt(std::max(transverse, 0.0)), std::sqrt(std::max(u3, 0.0))) / std::sqrt(k2);
  } else {
    if (!(u3 > 0.0) || !(-transverse < u3)) {
      throw DomainError("polar change: point outside the time-like region of the light cone");
    }
    c.theta = std::atanh(std::sqrt(-transverse / u3)) / std::sqrt(-k2);
  }
  if (transverse == 0.0) {
    c.phi = {0.0};
  } else {
    c.phi = {std::atan2(std::sqrt(std::max(u1 / transverse, 0.0)), std::sqrt(std::max(u2 / transverse, 0.0)))};
  }
  if (!std::isfinite(c.r) || !std::isfinite(c.theta)) throw DomainError("polar change: point outside the chart");
  return c;
}

namespace {

// Intermediate quantities of the inverse change: u_i from (r, theta, phi), then
// w_i = log(a_i) / (2z) with a_i = 1 + z u_i e^{-2z sum_{j<i} w_j}.
struct InverseChain {
  double sphi = 0.0;
  double cphi = 0.0;
  double c2 = 0.0;
  Eigen::Vector3d u = Eigen::Vector3d::Zero();
  Eigen::Vector3d a = Eigen::Vector3d::Ones();
  Eigen::Vector3d w = Eigen::Vector3d::Zero();
};

InverseChain inverse_chain(const DeformationParams& params, const GeodesicPolarCoords& coords) {
  require_polar(params);
  if (coords.dimension() != 3) throw std::invalid_argument("polar_change_inverse expects (r, theta, phi)");
  const double z = params.z;
  const double k2 = params.lambda2_sq;
  if (z > 0 && !(std::sqrt(z) * coords.r < 0.5 * std::numbers::pi)) {
    throw DomainError("polar_change_inverse: r beyond pi/(2 sqrt(z))");
  }
  InverseChain c;
  const double t = ck_tan(z, coords.r);
  const double total = t * t;
  c.c2 = ck_cos(k2, coords.theta);
  const double s2 = ck_sin(k2, coords.theta);
  const double transverse = total * k2 * s2 * s2;
  c.sphi = std::sin(coords.phi[0]);
  c.cphi = std::cos(coords.phi[0]);
  c.u = {transverse * c.sphi * c.sphi, transverse * c.cphi * c.cphi, total * c.c2 * c.c2};
  double shift = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double v = c.u[i] * std::exp(-2 * z * shift);
    c.a[i] = 1.0 + z * v;
    c.w[i] = 0.5 * log1p_over(z, v);
    shift += c.w[i];
  }
  return c;
}

}  // namespace

double cartesian_chart_margin(const DeformationParams& params, const GeodesicPolarCoords& coords) {
  const auto c = inverse_chain(params, coords);
  return std::isfinite(c.a.minCoeff()) ? c.a.minCoeff() : 0.0;
}

Eigen::Vector3d polar_change_inverse(const DeformationParams& params, const GeodesicPolarCoords& coords) {
  const auto c = inverse_chain(params, coords);
  if (!(c.a.minCoeff() > 0.0) || !c.w.allFinite()) {
    throw DomainError("polar_change_inverse: point outside the image of the Cartesian chart");
  }
  const auto signs = chart_signs(params.lambda2_sq);
  // Signed branch: q1 ~ sin(phi), q2 ~ cos(phi), q3 ~ C_k2(theta), smooth across the octant walls.
  const double branch[3] = {c.sphi, c.cphi, c.c2};
  Eigen::Vector3d q;
  for (int i = 0; i < 3; ++i) q[i] = std::copysign(std::sqrt(std::max(0.0, signs[i] * c.w[i])), branch[i]);
  return q;
}

namespace {

constexpr double kJacobianStep = 1e-4;

template <class Map>
Eigen::Matrix3d numeric_jacobian(const Map& map, const Eigen::Vector3d& x) {
  Eigen::Matrix3d jac;
  for (int k = 0; k < 3; ++k) {
    const double h = kJacobianStep * std::max(1.0, std::abs(x[k]));
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    const double offsets[] = {-2, -1, 1, 2};
    const double weights[] = {1, -8, 8, -1};
    for (int s = 0; s < 4; ++s) {
      Eigen::Vector3d y = x;
      y[k] += offsets[s] * h;
      acc += weights[s] * map(y);
    }
    jac.col(k) = acc / (12.0 * h);
  }
  return jac;
}

Eigen::Vector3d polar_vector(const DeformationParams& params, const Eigen::Vector3d& q) {
  const auto c = polar_change(params, q);
  return {c.r, c.theta, c.phi[0]};
}

}  // namespace

Eigen::Matrix3d polar_change_jacobian(const DeformationParams& params, const Eigen::Vector3d& q) {
  return numeric_jacobian([&](const Eigen::Vector3d& x) { return polar_vector(params, x); }, q);
}

Eigen::Matrix3d polar_inverse_jacobian(const DeformationParams& params, const Eigen::Vector3d& y) {
  return numeric_jacobian(
      [&](const Eigen::Vector3d& x) {
        return polar_change_inverse(params, GeodesicPolarCoords{x[0], x[1], {x[2]}});
      },
      y);
}

PhasePoint polar_phase_to_cartesian(const DeformationParams& params, const Eigen::Vector3d& y,
                                    const Eigen::Vector3d& p_y) {
  PhasePoint out;
  out.q = polar_change_inverse(params, GeodesicPolarCoords{y[0], y[1], {y[2]}});
  const Eigen::Matrix3d dq_dy = polar_inverse_jacobian(params, y);
  out.p = dq_dy.transpose().lu().solve(p_y);
  return out;
}

// ---------------------------------------------------------------------------
// Polar metric and dynamics

double conformal_denominator(const DeformationParams& params, double r) {
  const double c = ck_cos(params.z, r);
  if (!(c > 0.0)) return 0.0;
  return c * params.profile.value(-std::log(c));
}

CoordinateGuard deformed_polar_guard(const DeformationParams& params, ChartOptions options) {
  return [params, options](const Eigen::VectorXd& y) {
    if (y.size() != 3 || !y.allFinite()) return false;
    if (!polar_chart_contains(params.kappa(), y, options)) return false;
    return conformal_denominator(params, y[0]) > 1e-12;
  };
}

MetricField deformed_metric_polar(const DeformationParams& params, ChartOptions options) {
  const MetricField base = metric_polar(params.kappa(), 3, options);
  auto eval = [params, base](const Point& y) {
    const double den = conformal_denominator(params, y[0]);
    if (!(den > 0.0)) {
      std::ostringstream os;
      os << "conformal factor singular at r=" << y[0] << " (C_z(r) g(r) = " << den << ")";
      throw DomainError(os.str());
    }
    return Eigen::MatrixXd(base(y) / den);
  };
  std::ostringstream desc;
  desc << "deformed-polar(z=" << params.z << ", lambda2^2=" << params.lambda2_sq << ", g from f=" << params.profile.name
       << ")";
  return MetricField(3, eval, deformed_polar_guard(params, options), params.lambda2_sq == 0.0, desc.str());
}

Hamiltonian geodesic_hamiltonian(const DeformationParams& params) {
  if (params.lambda2_sq == 0.0) {
    throw DegenerateSignatureError(
        "lambda2^2 = 0: the metric is degenerate and its geodesic Hamiltonian diverges; no dynamics");
  }
  return [params](const Eigen::VectorXd& y, const Eigen::VectorXd& p) {
    const double z = params.z;
    const double k2 = params.lambda2_sq;
    const double s1 = ck_sin(z, y[0]);
    const double s2 = ck_sin(k2, y[1]);
    const double angular = (p[1] * p[1] + p[2] * p[2] / (s2 * s2)) / (k2 * s1 * s1);
    return 0.5 * conformal_denominator(params, y[0]) * (p[0] * p[0] + angular);
  };
}

double cartesian_geodesic_hamiltonian(const DeformationParams& params, const PhasePoint& pt) {
  const auto j = realization(params.z, pt.q, pt.p, chart_signs(params.lambda2_sq));
  return 0.25 * j.j_plus * params.profile.value(params.z * j.j_minus);
}

std::string classify_deformed(const DeformationParams& params) {
  const double z = params.z;
  const double k2 = params.lambda2_sq;
  if (z == 0.0) return classify_space({0.0, k2});
  if (z > 0) {
    return k2 > 0 ? "deformed-sphere" : (k2 == 0 ? "deformed-oscillating-NH" : "deformed-anti-de-sitter");
  }
  return k2 > 0 ? "deformed-hyperbolic" : (k2 == 0 ? "deformed-expanding-NH" : "deformed-de-sitter");
}

std::string deformed_symbol(const DeformationParams& params) {
  const double z = params.z;
  const double k2 = params.lambda2_sq;
  if (z == 0.0) return k2 > 0 ? "E^3" : (k2 == 0 ? "G^{2+1}" : "M^{2+1}");
  if (z > 0) return k2 > 0 ? "S^3_z" : (k2 == 0 ? "NH^{2+1}_{+,z}" : "AdS^{2+1}_z");
  return k2 > 0 ? "H^3_z" : (k2 == 0 ? "NH^{2+1}_{-,z}" : "dS^{2+1}_z");
}

FlowInvariants flow_invariants(const DeformationParams& params, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& p_y) {
  FlowInvariants inv = cartesian_flow_invariants(params, polar_phase_to_cartesian(params, y.head<3>(), p_y.head<3>()));
  inv.hamiltonian = geodesic_hamiltonian(params)(y, p_y);
  inv.p_phi = p_y[2];
  return inv;
}

FlowInvariants cartesian_flow_invariants(const DeformationParams& params, const PhasePoint& pt) {
  const auto signs = chart_signs(params.lambda2_sq);
  FlowInvariants inv;
  inv.hamiltonian = cartesian_geodesic_hamiltonian(params, pt);
  inv.casimir2_12 = casimir_block(params.z, pt, 0, 2, signs);
  inv.casimir2_23 = casimir_block(params.z, pt, 1, 2, signs);
  inv.casimir3 = casimir_block(params.z, pt, 0, 3, signs);
  inv.p_phi = pt.q[1] * pt.p[0] - pt.q[0] * pt.p[1];
  return inv;
}

namespace {

// dq/d(r, theta, phi) of the flat chart.
Eigen::Matrix3d flat_jacobian(double k2, const Eigen::Vector3d& y) {
  const double s = std::sqrt(std::abs(k2));
  const double a = y[0] / std::numbers::sqrt2;
  const double c2 = ck_cos(k2, y[1]);
  const double s2 = ck_sin(k2, y[1]);
  const double sp = std::sin(y[2]);
  const double cp = std::cos(y[2]);
  Eigen::Matrix3d jac;
  jac.col(0) = Eigen::Vector3d(s * s2 * sp, s * s2 * cp, c2) / std::numbers::sqrt2;
  jac.col(1) = a * Eigen::Vector3d(s * c2 * sp, s * c2 * cp, -k2 * s2);
  jac.col(2) = a * Eigen::Vector3d(s * s2 * cp, -s * s2 * sp, 0.0);
  return jac;
}

void require_flat_chart(double k2) {
  if (k2 == 0.0) throw DomainError("flat chart is singular for lambda2^2 = 0");
}

}  // namespace

PhasePoint flat_polar_to_cartesian(double lambda2_sq, const Eigen::Vector3d& y, const Eigen::Vector3d& p_y) {
  require_flat_chart(lambda2_sq);
  const Eigen::Matrix3d jac = flat_jacobian(lambda2_sq, y);
  PhasePoint out;
  out.q = jac.col(0) * y[0];
  out.p = jac.transpose().lu().solve(p_y);
  return out;
}

std::pair<Eigen::Vector3d, Eigen::Vector3d> flat_cartesian_to_polar(double lambda2_sq, const PhasePoint& pt) {
  require_flat_chart(lambda2_sq);
  const double s = std::sqrt(std::abs(lambda2_sq));
  const double rho = std::hypot(pt.q[0], pt.q[1]);
  const double q3 = pt.q[2];
  const double half_r2 = lambda2_sq > 0 ? rho * rho + q3 * q3 : q3 * q3 - rho * rho;
  if (!(half_r2 > 0.0) || (lambda2_sq < 0 && !(q3 > rho))) {
    throw DomainError("flat chart: point outside the time-like cone of the origin");
  }
  double phi = std::atan2(pt.q[0], pt.q[1]);
  if (phi < 0.0) phi += 2 * std::numbers::pi;
  const double theta = lambda2_sq > 0 ? std::atan2(rho, q3) / s : std::atanh(rho / q3) / s;
  const Eigen::Vector3d y(std::numbers::sqrt2 * std::sqrt(half_r2), theta, phi);
  return {y, flat_jacobian(lambda2_sq, y).transpose() * pt.p};
}

}  // namespace ckgeo
