#pragma once

// Non-standard deformation of sl(2) at the Poisson level: coproduct-iterated
// symplectic realizations, their Casimirs, and the 3D spaces of non-constant
// curvature carried by the kinetic energy T = 1/2 J+ f(z J-).
//
// Conventions:
//  * Every lambda enters through kappa-trigonometry in kappa1 = z and
//    kappa2 = lambda2^2, so no complex arithmetic appears.
//  * The Cartesian metric is stored with the overall factor 2 of
//    ds^2 = 2 T dt^2 (Normalization::printed). That normalization is the one
//    whose pushforward is the polar conformal metric, and whose curvature is
//    K = -5 z sinh(z q^2) for f = 1. Normalization::unit halves the metric and
//    doubles every curvature.
//  * For lambda2^2 < 0 the Cartesian chart is the analytic continuation
//    q1 -> i q1, q2 -> i q2: site i carries a sign eps_i and uses w_i = eps_i q_i^2.

#include "ckgeo/ck_space.hpp"
#include "ckgeo/flow.hpp"
#include "ckgeo/metric.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ckgeo {

/// Kinetic-energy profile f(x), x = z J-. Equivalently g(r) = f(-log C_z(r)).
struct Profile {
  std::string name;
  std::function<double(double)> f;
  /// Optional analytic derivatives; central differences are used when empty.
  std::function<double(double)> df;
  std::function<double(double)> d2f;

  double value(double x) const { return f(x); }
  double first(double x) const;
  double second(double x) const;

  /// f = 1.
  static Profile one();
  /// f = e^x, i.e. g = 1/C_z(r): the constant-curvature member.
  static Profile exponential();
  /// f = 1 + x^2/2.
  static Profile poly2();
  static Profile custom(std::string name, std::function<double(double)> f);
  /// "one", "ck", "exp", "poly2"; throws std::invalid_argument otherwise.
  static Profile by_name(const std::string& name);
};

struct DeformationParams {
  double z = 0.0;           // deformation parameter, kappa1 = lambda1^2
  double lambda2_sq = 1.0;  // kappa2
  Profile profile = Profile::one();

  KappaPair kappa() const { return {z, lambda2_sq}; }
};

struct PhasePoint {
  Eigen::VectorXd q;
  Eigen::VectorXd p;
};

struct GeneratorTriple {
  double j_minus = 0.0;
  double j_plus = 0.0;
  double j_three = 0.0;
};

/// n-site realization with site prefactors
/// sinhc(z w_i) exp(-z sum_{j<i} w_j) exp(z sum_{j>i} w_j), w_i = eps_i q_i^2.
/// `signs` (eps_i = +-1) defaults to all +1.
GeneratorTriple realization(double z, const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                            const std::vector<int>& signs = {});
GeneratorTriple realization(const DeformationParams& params, int n_sites, const PhasePoint& pt);

/// sinh(z J-)/z J+ - J3^2.
double casimir_value(double z, const GeneratorTriple& j);
double casimir(const DeformationParams& params, int n_sites, const PhasePoint& pt);

/// Casimir of the realization on sites [first, first + count) of a chain.
double casimir_block(double z, const PhasePoint& pt, int first, int count, const std::vector<int>& signs = {});

/// Two-site Casimir in factorized form, sinhc sinhc e^{-z q1^2} e^{z q2^2} (q1 p2 - q2 p1)^2.
double casimir2_closed_form(double z, double q1, double q2, double p1, double p2);

using PhaseFunction = std::function<double(const PhasePoint&)>;

/// sum_i (dfa/dq_i dfb/dp_i - dfb/dq_i dfa/dp_i), fourth-order central differences.
double canonical_poisson(const PhaseFunction& fa, const PhaseFunction& fb, const PhasePoint& pt,
                         double relative_step = 1e-3);

struct BracketResiduals {
  double j3_jplus = 0.0;      // {J3,J+} - 2 J+ cosh(z J-)
  double j3_jminus = 0.0;     // {J3,J-} + 2 sinh(z J-)/z
  double jminus_jplus = 0.0;  // {J-,J+} - 4 J3
  double casimir_central = 0.0;  // max_a |{C, J_a}|

  double max() const;
};

BracketResiduals bracket_residuals(double z, const PhasePoint& pt, const std::vector<int>& signs = {});

enum class Normalization { printed, unit };

/// Chart signs (eps_1, eps_2, eps_3) for lambda2^2: (+,+,+) unless lambda2^2 < 0.
std::vector<int> chart_signs(double lambda2_sq);

/// Diagonal metric 2 eps_i / (b_i f(z J-)) in the coordinates q, where b_i is the
/// site prefactor of `realization`.
MetricField deformed_metric_cartesian(const DeformationParams& params, Normalization norm = Normalization::printed);

/// z (6 f' cosh x + (4 f'' - 5 f - 5 f'^2/f) sinh x). Throws DomainError when f(x) == 0.
double scalar_curvature_formula(const DeformationParams& params, double x);

struct CurvatureTriple {
  double k12 = 0.0;
  double k13 = 0.0;
  double k23 = 0.0;
  double scalar = 0.0;
};

/// Sectional and scalar curvature of the printed Cartesian metric with f = 1.
CurvatureTriple cartesian_curvature_closed_form(double z, const Eigen::Vector3d& q);

/// Curvature of C_z(r)^{-1} ds^2_CK (g = 1): K_1j = -z^2 S_z^2(r) / (2 C_z(r)), K_23 = K_1j/2, K = 5 K_1j.
CurvatureTriple polar_curvature_closed_form(double z, double r);

/// q -> (r, theta, phi) on the canonical branch (|q_i| is used). Throws
/// DomainError for lambda2^2 == 0 and outside the chart (light cone for lambda2^2 < 0).
GeodesicPolarCoords polar_change(const DeformationParams& params, const Eigen::Vector3d& q);
/// Smooth inverse: q1, q2, q3 carry the signs of sin(phi), cos(phi), C_k2(theta),
/// so it is the exact inverse on the positive octant.
Eigen::Vector3d polar_change_inverse(const DeformationParams& params, const GeodesicPolarCoords& coords);

/// min_i (1 + z u_i e^{-2z sum_{j<i} w_j}): positive exactly where (r, theta, phi)
/// has a real Cartesian preimage. The polar chart of the deformed AdS and
/// hyperbolic spaces extends beyond that image.
double cartesian_chart_margin(const DeformationParams& params, const GeodesicPolarCoords& coords);

/// d(r, theta, phi)/dq and dq/d(r, theta, phi), fourth-order central differences.
Eigen::Matrix3d polar_change_jacobian(const DeformationParams& params, const Eigen::Vector3d& q);
Eigen::Matrix3d polar_inverse_jacobian(const DeformationParams& params, const Eigen::Vector3d& y);

/// Canonical transport of (y, p_y) to (q, p_q) with p_q = (dq/dy)^{-T} p_y.
PhasePoint polar_phase_to_cartesian(const DeformationParams& params, const Eigen::Vector3d& y,
                                    const Eigen::Vector3d& p_y);

/// C_z(r) g(r) > 0 with g(r) = f(-log C_z(r)); false where C_z(r) <= 0.
double conformal_denominator(const DeformationParams& params, double r);

/// (C_z(r) g(r))^{-1} ds^2_CK with (kappa1, kappa2) = (z, lambda2^2), N = 3.
MetricField deformed_metric_polar(const DeformationParams& params, ChartOptions options = {});

/// Polar chart guard plus C_z(r) g(r) > 0.
CoordinateGuard deformed_polar_guard(const DeformationParams& params, ChartOptions options = {});

/// T = 1/2 C_z(r) g(r) (p_r^2 + (p_theta^2 + p_phi^2 / S_k2(theta)^2) / (k2 S_z(r)^2)).
/// Throws DegenerateSignatureError when lambda2^2 == 0.
Hamiltonian geodesic_hamiltonian(const DeformationParams& params);

/// Geodesic Hamiltonian of the printed Cartesian metric, 1/4 J+ f(z J-).
double cartesian_geodesic_hamiltonian(const DeformationParams& params, const PhasePoint& pt);

/// deformed-sphere, deformed-oscillating-NH, deformed-anti-de-sitter, euclidean,
/// galilean, minkowskian, deformed-hyperbolic, deformed-expanding-NH, deformed-de-sitter.
std::string classify_deformed(const DeformationParams& params);
/// S^3_z, NH^{2+1}_{+,z}, ... (plain flat symbols when z == 0).
std::string deformed_symbol(const DeformationParams& params);

struct FlowInvariants {
  double hamiltonian = 0.0;
  double casimir2_12 = 0.0;  // sites (1,2) of the three-site chain
  double casimir2_23 = 0.0;  // sites (2,3), the mirrored two-site Casimir
  double casimir3 = 0.0;
  double p_phi = 0.0;
};

/// Invariants of the polar geodesic flow at (y, p_y) = (r, theta, phi, p_r, p_theta, p_phi).
FlowInvariants flow_invariants(const DeformationParams& params, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& p_y);

/// Invariants on a Cartesian phase point: H = 1/4 J+ f, the Casimirs, and p_phi = q2 p1 - q1 p2.
FlowInvariants cartesian_flow_invariants(const DeformationParams& params, const PhasePoint& pt);

/// Closed-form chart of the undeformed (z = 0) space, with exact momentum transport:
/// q = (r/sqrt 2) (sqrt|k2| S_k2(theta) sin phi, sqrt|k2| S_k2(theta) cos phi, C_k2(theta)).
/// Throws DomainError for lambda2^2 == 0.
PhasePoint flat_polar_to_cartesian(double lambda2_sq, const Eigen::Vector3d& y, const Eigen::Vector3d& p_y);
/// Inverse of flat_polar_to_cartesian with phi in [0, 2 pi). Throws DomainError outside the chart.
std::pair<Eigen::Vector3d, Eigen::Vector3d> flat_cartesian_to_polar(double lambda2_sq, const PhasePoint& pt);

}  // namespace ckgeo
