#pragma once

// Numeric Levi-Civita geometry of an arbitrary MetricField. Metric derivatives
// are taken with fourth-order central stencils; no positivity is assumed, so
// Lorentzian metrics are handled identically.

#include "ckgeo/metric.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ckgeo {

/// Stencil steps, relative: the step along x_i is step * max(1, |x_i|).
struct FiniteDifference {
  double first_step = 1e-3;
  double second_step = 2e-3;
};

/// Gamma^k_ij stored as gamma[k](i, j).
struct ChristoffelSymbols {
  std::vector<Eigen::MatrixXd> gamma;

  double operator()(int k, int i, int j) const { return gamma[k](i, j); }
  int dimension() const { return static_cast<int>(gamma.size()); }
};

/// Fully covariant R_abcd, normalized so a space of constant curvature K has
/// R_abcd = K (g_ac g_bd - g_ad g_bc).
class RiemannTensor {
 public:
  explicit RiemannTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dimension() const { return n_; }
  double& operator()(int a, int b, int c, int d) { return data_[((a * n_ + b) * n_ + c) * n_ + d]; }
  double operator()(int a, int b, int c, int d) const { return data_[((a * n_ + b) * n_ + c) * n_ + d]; }

 private:
  int n_;
  std::vector<double> data_;
};

/// Value, first and second partial derivatives of the metric at one point.
struct MetricJet {
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  std::vector<Eigen::MatrixXd> dg;                // dg[k](i,j) = d_k g_ij
  std::vector<std::vector<Eigen::MatrixXd>> ddg;  // ddg[k][l](i,j) = d_k d_l g_ij
};

enum class CurvatureMethod { finite_difference, closed_form };

struct CurvatureReport {
  Point point;
  /// K_ij for coordinate planes i < j; nullopt where the plane is (near) null.
  std::map<std::pair<int, int>, std::optional<double>> sectional;
  double scalar = 0.0;
  CurvatureMethod method = CurvatureMethod::finite_difference;
};

/// Metric determinant magnitude below which the inverse metric is refused.
inline constexpr double kDegenerateDeterminant = 1e-10;
/// |g_ii g_jj - g_ij^2| below which a sectional curvature is reported as undefined.
inline constexpr double kNullPlaneThreshold = 1e-10;

/// Throws DomainError outside the guard and DegenerateMetricError when |det g| <= 1e-10.
MetricJet metric_jet(const MetricField& metric, const Point& x, const FiniteDifference& fd = {},
                     bool with_second = true);

ChristoffelSymbols christoffel(const MetricField& metric, const Point& x, const FiniteDifference& fd = {});

RiemannTensor riemann_tensor(const MetricField& metric, const Point& x, const FiniteDifference& fd = {});

CurvatureReport curvature(const MetricField& metric, const Point& x, const FiniteDifference& fd = {});

/// Sectional and scalar curvature from an already computed tensor.
CurvatureReport curvature_from_tensor(const RiemannTensor& riemann, const Eigen::MatrixXd& g, const Point& x);

/// Report with every coordinate-plane sectional curvature equal to k_sectional.
CurvatureReport closed_form_report(const Point& x, int n, double k_sectional, double k_scalar);

/// max |R_abcd + R_bacd|, |R_abcd + R_abdc|, |R_abcd - R_cdab| over all index tuples.
double riemann_symmetry_residual(const RiemannTensor& riemann);

/// max |R_abcd + R_acdb + R_adbc|.
double bianchi_residual(const RiemannTensor& riemann);

}  // namespace ckgeo
