#include "ckgeo/riemann.hpp"

#include "ckgeo/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace ckgeo {

namespace {

// Fourth-order central first-derivative stencil: offsets and weights (over 12 h).
constexpr std::array<int, 4> kOffsets{-2, -1, 1, 2};
constexpr std::array<double, 4> kWeights{1.0, -8.0, 8.0, -1.0};

double step_for(double base, double coordinate) { return base * std::max(1.0, std::abs(coordinate)); }

Eigen::MatrixXd symmetric(const MetricField& metric, const Point& x) {
  Eigen::MatrixXd g = metric(x);
  return 0.5 * (g + g.transpose());
}

std::string point_string(const Point& x) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

MetricJet metric_jet(const MetricField& metric, const Point& x, const FiniteDifference& fd, bool with_second) {
  const int n = metric.dimension();
  if (x.size() != n) throw std::invalid_argument("point dimension does not match metric dimension");
  if (!metric.in_domain(x)) {
    throw DomainError("point " + point_string(x) + " violates the domain guard of " + metric.description());
  }
  if (metric.degenerate()) {
    throw DegenerateMetricError(metric.description() + " is degenerate; curvature needs an invertible metric");
  }
  MetricJet jet;
  jet.g = symmetric(metric, x);
  const double det = jet.g.determinant();
  if (!(std::abs(det) > kDegenerateDeterminant)) {
    std::ostringstream os;
    os << "metric determinant " << det << " at " << point_string(x) << " is degenerate";
    throw DegenerateMetricError(os.str());
  }
  jet.g_inv = jet.g.inverse();

  jet.dg.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k) {
    const double h = step_for(fd.first_step, x[k]);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t s = 0; s < kOffsets.size(); ++s) {
      Point y = x;
      y[k] += kOffsets[s] * h;
      acc += kWeights[s] * symmetric(metric, y);
    }
    jet.dg[k] = acc / (12.0 * h);
  }
  if (!with_second) return jet;

  jet.ddg.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  for (int k = 0; k < n; ++k) {
    const double hk = step_for(fd.second_step, x[k]);
    {
      Eigen::MatrixXd acc = -30.0 * jet.g;
      for (int s : {-2, -1, 1, 2}) {
        Point y = x;
        y[k] += s * hk;
        const double w = (std::abs(s) == 1) ? 16.0 : -1.0;
        acc += w * symmetric(metric, y);
      }
      jet.ddg[k][k] = acc / (12.0 * hk * hk);
    }
    for (int l = k + 1; l < n; ++l) {
      const double hl = step_for(fd.second_step, x[l]);
      Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
      for (std::size_t s = 0; s < kOffsets.size(); ++s) {
        for (std::size_t t = 0; t < kOffsets.size(); ++t) {
          Point y = x;
          y[k] += kOffsets[s] * hk;
          y[l] += kOffsets[t] * hl;
          acc += (kWeights[s] * kWeights[t]) * symmetric(metric, y);
        }
      }
      jet.ddg[k][l] = acc / (144.0 * hk * hl);
      jet.ddg[l][k] = jet.ddg[k][l];
    }
  }
  return jet;
}

namespace {

ChristoffelSymbols christoffel_from_jet(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  // First kind: Gamma_lij = 1/2 (d_i g_jl + d_j g_il - d_l g_ij).
  std::vector<Eigen::MatrixXd> first(n, Eigen::MatrixXd::Zero(n, n));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = 0.5 * (jet.dg[i](j, l) + jet.dg[j](i, l) - jet.dg[l](i, j));
        first[l](i, j) = v;
        first[l](j, i) = v;
      }
  ChristoffelSymbols out;
  out.gamma.assign(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const double w = jet.g_inv(k, l);
      if (w != 0.0) out.gamma[k] += w * first[l];
    }
  return out;
}

RiemannTensor riemann_from_jet(const MetricJet& jet, const ChristoffelSymbols& gamma) {
  const int n = static_cast<int>(jet.g.rows());
  RiemannTensor r(n);
  // Lowered Christoffel products: (g Gamma)_{f,ad} = g_fe Gamma^e_ad.
  std::vector<Eigen::MatrixXd> lowered(n, Eigen::MatrixXd::Zero(n, n));
  for (int f = 0; f < n; ++f)
    for (int e = 0; e < n; ++e)
      if (jet.g(f, e) != 0.0) lowered[f] += jet.g(f, e) * gamma.gamma[e];

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double v = 0.5 * (jet.ddg[b][c](a, d) + jet.ddg[a][d](b, c) - jet.ddg[a][c](b, d) -
                            jet.ddg[b][d](a, c));
          for (int f = 0; f < n; ++f) {
            v += gamma.gamma[f](b, c) * lowered[f](a, d) - gamma.gamma[f](b, d) * lowered[f](a, c);
          }
          r(a, b, c, d) = v;
        }
  return r;
}

}  // namespace

ChristoffelSymbols christoffel(const MetricField& metric, const Point& x, const FiniteDifference& fd) {
  return christoffel_from_jet(metric_jet(metric, x, fd, false));
}

RiemannTensor riemann_tensor(const MetricField& metric, const Point& x, const FiniteDifference& fd) {
  const auto jet = metric_jet(metric, x, fd, true);
  return riemann_from_jet(jet, christoffel_from_jet(jet));
}

CurvatureReport curvature_from_tensor(const RiemannTensor& riemann, const Eigen::MatrixXd& g, const Point& x) {
  const int n = riemann.dimension();
  CurvatureReport report;
  report.point = x;
  report.method = CurvatureMethod::finite_difference;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double den = g(i, i) * g(j, j) - g(i, j) * g(i, j);
      if (std::abs(den) < kNullPlaneThreshold) {
        report.sectional[{i, j}] = std::nullopt;
      } else {
        report.sectional[{i, j}] = riemann(i, j, i, j) / den;
      }
    }
  const Eigen::MatrixXd g_inv = g.inverse();
  double scalar = 0.0;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (g_inv(a, c) == 0.0) continue;
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) scalar += g_inv(a, c) * g_inv(b, d) * riemann(a, b, c, d);
    }
  report.scalar = scalar;
  return report;
}

CurvatureReport curvature(const MetricField& metric, const Point& x, const FiniteDifference& fd) {
  const auto jet = metric_jet(metric, x, fd, true);
  const auto riemann = riemann_from_jet(jet, christoffel_from_jet(jet));
  return curvature_from_tensor(riemann, jet.g, x);
}

CurvatureReport closed_form_report(const Point& x, int n, double k_sectional, double k_scalar) {
  CurvatureReport report;
  report.point = x;
  report.method = CurvatureMethod::closed_form;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) report.sectional[{i, j}] = k_sectional;
  report.scalar = k_scalar;
  return report;
}

double riemann_symmetry_residual(const RiemannTensor& r) {
  const int n = r.dimension();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double v = r(a, b, c, d);
          worst = std::max({worst, std::abs(v + r(b, a, c, d)), std::abs(v + r(a, b, d, c)),
                            std::abs(v - r(c, d, a, b))});
        }
  return worst;
}

double bianchi_residual(const RiemannTensor& r) {
  const int n = r.dimension();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          worst = std::max(worst, std::abs(r(a, b, c, d) + r(a, c, d, b) + r(a, d, b, c)));
  return worst;
}

}  // namespace ckgeo
