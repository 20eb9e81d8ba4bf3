#pragma once

// Rank-one Cayley-Klein spaces SO_{k1,k2}(N+1)/SO_{k2}(N) with k3 = ... = kN = +1:
// ambient model, geodesic polar coordinates and the induced metric.

#include "ckgeo/metric.hpp"

#include <string>
#include <vector>

namespace ckgeo {

struct KappaPair {
  double kappa1 = 1.0;  // curvature
  double kappa2 = 1.0;  // signature / speed-of-light contraction
};

/// (r, theta, phi_3..phi_N).
struct GeodesicPolarCoords {
  double r = 0.0;
  double theta = 0.0;
  std::vector<double> phi;

  int dimension() const { return 2 + static_cast<int>(phi.size()); }
  Point to_point() const;
  static GeodesicPolarCoords from_point(const Point& x);
};

struct AmbientPoint {
  std::vector<double> x;
};

struct ChartOptions {
  /// Exclusion radius around r = 0, the antipode and theta in {0, pi/sqrt(k2)}.
  double singular_radius = 1e-6;
  /// Largest admissible |sqrt(-k2) theta| on Lorentzian spaces.
  double rapidity_cap = 50.0;
};

/// x0^2 + k1 x1^2 + k1 k2 sum_{j>=2} xj^2 - 1.
double sphere_constraint_residual(const AmbientPoint& p, KappaPair kp);

/// Ambient coordinates of the point reached from the origin (1,0,...,0).
/// Throws DomainError when r < 0, or sqrt(k1) r >= pi for k1 > 0.
AmbientPoint embed(const GeodesicPolarCoords& coords, KappaPair kp);

/// d x_j / d (r, theta, phi...), (N+1) x N.
Eigen::MatrixXd embedding_jacobian(const GeodesicPolarCoords& coords, KappaPair kp);

/// dr^2 + k2 S_k1^2(r) (dtheta^2 + S_k2^2(theta) sum_i prod_{s<i} sin^2 phi_s dphi_i^2).
/// Degenerate (flagged) when k2 == 0.
MetricField metric_polar(KappaPair kp, int n, ChartOptions options = {});

/// (1/k1)(dx0^2 + k1 dx1^2 + k1 k2 sum dxj^2) pulled back through embed.
/// Throws FlatCaseError when k1 == 0.
MetricField metric_ambient_pullback(KappaPair kp, int n, ChartOptions options = {});

/// True when the polar chart of (kp, n) has no coordinate singularity at x.
bool polar_chart_contains(KappaPair kp, const Point& x, ChartOptions options = {});

/// spherical, euclidean, hyperbolic, anti-de-sitter, minkowskian, de-sitter,
/// oscillating-NH, galilean or expanding-NH from the signs of (k1, k2).
std::string classify_space(KappaPair kp);

/// Diagonal of the polar metric for N = 3 as strings, e.g. {"1", "sin^2 r", "sin^2 r sin^2 theta"}.
std::vector<std::string> metric_diagonal_symbolic(KappaPair kp);

/// Line element for N = 3, e.g. "dr^2 + sin^2 r (dtheta^2 + sin^2 theta dphi^2)".
std::string line_element_symbolic(KappaPair kp);

/// Lower-cases and strips whitespace, braces, backslashes, '*' and LaTeX
/// spacing/roman markers so hand-written and generated forms compare equal.
std::string normalize_symbolic(const std::string& expr);

struct SpaceCatalogEntry {
  std::string name;
  std::string symbol;
  std::string algebra;
  KappaPair kappa;
  std::vector<std::string> metric_diagonal_symbolic;
  std::string line_element;
  double k_sectional = 0.0;
  double k_scalar = 0.0;
  bool degenerate = false;
};

/// The nine N = 3 spaces with (k1, k2) in {+1, 0, -1}^2, rows in the order
/// (+,+) (0,+) (-,+) (+,0) (0,0) (-,0) (+,-) (0,-) (-,-).
std::vector<SpaceCatalogEntry> space_catalog();

}  // namespace ckgeo
