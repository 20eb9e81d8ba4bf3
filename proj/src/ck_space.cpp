#include "ckgeo/ck_space.hpp"

#include "ckgeo/ck_algebra.hpp"
#include "ckgeo/errors.hpp"
#include "ckgeo/kappa_trig.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ckgeo {

Point GeodesicPolarCoords::to_point() const {
  Point x(dimension());
  x[0] = r;
  x[1] = theta;
  for (std::size_t i = 0; i < phi.size(); ++i) x[2 + i] = phi[i];
  return x;
}

GeodesicPolarCoords GeodesicPolarCoords::from_point(const Point& x) {
  if (x.size() < 2) throw std::invalid_argument("polar coordinates need at least (r, theta)");
  GeodesicPolarCoords c;
  c.r = x[0];
  c.theta = x[1];
  c.phi.assign(x.data() + 2, x.data() + x.size());
  return c;
}

double sphere_constraint_residual(const AmbientPoint& p, KappaPair kp) {
  double sum = 0.0;
  for (std::size_t j = 2; j < p.x.size(); ++j) sum += p.x[j] * p.x[j];
  const double x0 = p.x.at(0);
  const double x1 = p.x.size() > 1 ? p.x[1] : 0.0;
  return x0 * x0 + kp.kappa1 * x1 * x1 + kp.kappa1 * kp.kappa2 * sum - 1.0;
}

namespace {

enum class Factor { ck1, sk1, ck2, sk2, sin, cos };

struct Term {
  int coord;
  Factor kind;
};

double value(Factor f, double t, KappaPair kp) {
  switch (f) {
    case Factor::ck1: return ck_cos(kp.kappa1, t);
    case Factor::sk1: return ck_sin(kp.kappa1, t);
    case Factor::ck2: return ck_cos(kp.kappa2, t);
    case Factor::sk2: return ck_sin(kp.kappa2, t);
    case Factor::sin: return std::sin(t);
    case Factor::cos: return std::cos(t);
  }
  return 0.0;
}

double derivative(Factor f, double t, KappaPair kp) {
  switch (f) {
    case Factor::ck1: return -kp.kappa1 * ck_sin(kp.kappa1, t);
    case Factor::sk1: return ck_cos(kp.kappa1, t);
    case Factor::ck2: return -kp.kappa2 * ck_sin(kp.kappa2, t);
    case Factor::sk2: return ck_cos(kp.kappa2, t);
    case Factor::sin: return std::cos(t);
    case Factor::cos: return -std::sin(t);
  }
  return 0.0;
}

// Each ambient coordinate is a product of one-variable factors, at most one per
// chart coordinate. Coordinates: 0 = r, 1 = theta, 2.. = phi_3...
std::vector<std::vector<Term>> ambient_factors(int n) {
  std::vector<std::vector<Term>> xs(n + 1);
  xs[0] = {{0, Factor::ck1}};
  xs[1] = {{0, Factor::sk1}, {1, Factor::ck2}};
  for (int j = 2; j <= n; ++j) {
    auto& t = xs[j];
    t = {{0, Factor::sk1}, {1, Factor::sk2}};
    for (int s = 3; s <= j; ++s) t.push_back({s - 1, Factor::sin});
    if (j < n) t.push_back({j, Factor::cos});  // cos phi_{j+1}
  }
  return xs;
}

void check_chart(const GeodesicPolarCoords& c, KappaPair kp) {
  if (c.dimension() < 2) throw std::invalid_argument("polar coordinates need N >= 2");
  if (c.r < 0) throw DomainError("geodesic polar chart requires r >= 0");
  if (kp.kappa1 > 0 && std::sqrt(kp.kappa1) * c.r >= std::numbers::pi) {
    throw DomainError("r beyond the antipodal point: sqrt(kappa1) r >= pi");
  }
}

std::string sk_squared(double kappa, const std::string& var) {
  if (kappa == 1.0) return "sin^2 " + var;
  if (kappa == 0.0) return var + "^2";
  if (kappa == -1.0) return "sinh^2 " + var;
  std::ostringstream os;
  os << "Sk^2[" << kappa << "](" << var << ")";
  return os.str();
}

std::string coefficient_prefix(double k2) {
  if (k2 == 1.0) return "";
  if (k2 == -1.0) return "-";
  std::ostringstream os;
  os << k2 << " ";
  return os.str();
}

}  // namespace

AmbientPoint embed(const GeodesicPolarCoords& coords, KappaPair kp) {
  check_chart(coords, kp);
  const int n = coords.dimension();
  const Point y = coords.to_point();
  AmbientPoint p;
  p.x.resize(n + 1);
  const auto factors = ambient_factors(n);
  for (int j = 0; j <= n; ++j) {
    double v = 1.0;
    for (const auto& t : factors[j]) v *= value(t.kind, y[t.coord], kp);
    p.x[j] = v;
  }
  return p;
}

Eigen::MatrixXd embedding_jacobian(const GeodesicPolarCoords& coords, KappaPair kp) {
  const int n = coords.dimension();
  const Point y = coords.to_point();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n);
  const auto factors = ambient_factors(n);
  for (int j = 0; j <= n; ++j) {
    for (std::size_t d = 0; d < factors[j].size(); ++d) {
      double v = derivative(factors[j][d].kind, y[factors[j][d].coord], kp);
      for (std::size_t o = 0; o < factors[j].size(); ++o) {
        if (o != d) v *= value(factors[j][o].kind, y[factors[j][o].coord], kp);
      }
      jac(j, factors[j][d].coord) = v;
    }
  }
  return jac;
}

bool polar_chart_contains(KappaPair kp, const Point& x, ChartOptions options) {
  const double eps = options.singular_radius;
  const double r = x[0];
  const double theta = x[1];
  if (!(r > eps)) return false;
  if (std::abs(ck_sin(kp.kappa1, r)) <= eps) return false;
  if (kp.kappa1 > 0 && std::sqrt(kp.kappa1) * r >= std::numbers::pi - eps) return false;
  if (kp.kappa2 > 0) {
    const double s = std::sqrt(kp.kappa2) * theta;
    if (!(s > eps && s < std::numbers::pi - eps)) return false;
  } else {
    if (std::abs(theta) <= eps) return false;
    if (kp.kappa2 < 0 && std::sqrt(-kp.kappa2) * std::abs(theta) > options.rapidity_cap) return false;
  }
  // Interior angles phi_3..phi_{N-1} multiply later components through sin phi_s.
  for (int i = 2; i + 1 < x.size(); ++i) {
    if (std::abs(std::sin(x[i])) <= eps) return false;
  }
  return true;
}

MetricField metric_polar(KappaPair kp, int n, ChartOptions options) {
  if (n < 2) throw std::invalid_argument("metric_polar requires n >= 2");
  auto eval = [kp, n](const Point& x) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    const double s1 = ck_sin(kp.kappa1, x[0]);
    const double s2 = ck_sin(kp.kappa2, x[1]);
    g(0, 0) = 1.0;
    g(1, 1) = kp.kappa2 * s1 * s1;
    double angular = kp.kappa2 * s1 * s1 * s2 * s2;
    for (int i = 2; i < n; ++i) {
      g(i, i) = angular;
      angular *= std::sin(x[i]) * std::sin(x[i]);
    }
    return g;
  };
  auto guard = [kp, options](const Point& x) { return polar_chart_contains(kp, x, options); };
  std::ostringstream desc;
  desc << "ck-polar(kappa1=" << kp.kappa1 << ", kappa2=" << kp.kappa2 << ", N=" << n << ")";
  return MetricField(n, eval, guard, kp.kappa2 == 0.0, desc.str());
}

MetricField metric_ambient_pullback(KappaPair kp, int n, ChartOptions options) {
  if (n < 2) throw std::invalid_argument("metric_ambient_pullback requires n >= 2");
  if (kp.kappa1 == 0.0) {
    throw FlatCaseError("ambient CK metric divides by kappa1; use metric_polar for kappa1 = 0");
  }
  auto eval = [kp, n](const Point& x) {
    const auto jac = embedding_jacobian(GeodesicPolarCoords::from_point(x), kp);
    Eigen::VectorXd form(n + 1);
    form[0] = 1.0;
    form[1] = kp.kappa1;
    for (int j = 2; j <= n; ++j) form[j] = kp.kappa1 * kp.kappa2;
    Eigen::MatrixXd g = jac.transpose() * form.asDiagonal() * jac / kp.kappa1;
    return Eigen::MatrixXd(0.5 * (g + g.transpose()));
  };
  auto guard = [kp, options](const Point& x) { return polar_chart_contains(kp, x, options); };
  std::ostringstream desc;
  desc << "ck-ambient(kappa1=" << kp.kappa1 << ", kappa2=" << kp.kappa2 << ", N=" << n << ")";
  return MetricField(n, eval, guard, kp.kappa2 == 0.0, desc.str());
}

std::string classify_space(KappaPair kp) {
  auto sign = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  const int s1 = sign(kp.kappa1);
  const int s2 = sign(kp.kappa2);
  if (s2 > 0) return s1 > 0 ? "spherical" : (s1 == 0 ? "euclidean" : "hyperbolic");
  if (s2 < 0) return s1 > 0 ? "anti-de-sitter" : (s1 == 0 ? "minkowskian" : "de-sitter");
  return s1 > 0 ? "oscillating-NH" : (s1 == 0 ? "galilean" : "expanding-NH");
}

std::vector<std::string> metric_diagonal_symbolic(KappaPair kp) {
  if (kp.kappa2 == 0.0) return {"1", "0", "0"};
  const std::string radial = sk_squared(kp.kappa1, "r");
  const std::string prefix = coefficient_prefix(kp.kappa2);
  return {"1", prefix + radial, prefix + radial + " " + sk_squared(kp.kappa2, "theta")};
}

std::string line_element_symbolic(KappaPair kp) {
  if (kp.kappa2 == 0.0) return "dr^2";
  std::string sign = " + ";
  std::string coef;
  if (kp.kappa2 < 0) sign = " - ";
  if (std::abs(kp.kappa2) != 1.0) coef = coefficient_prefix(std::abs(kp.kappa2));
  return "dr^2" + sign + coef + sk_squared(kp.kappa1, "r") + " (dtheta^2 + " +
         sk_squared(kp.kappa2, "theta") + " dphi^2)";
}

std::string normalize_symbolic(const std::string& expr) {
  std::string s = expr;
  for (const std::string marker : {"\\rm", "\\left", "\\right", "\\displaystyle", "\\,", "\\;", "\\quad"}) {
    for (auto pos = s.find(marker); pos != std::string::npos; pos = s.find(marker)) s.erase(pos, marker.size());
  }
  std::string out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' || c == '\\' || c == '*') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::vector<SpaceCatalogEntry> space_catalog() {
  struct Row {
    double k1, k2;
    const char* symbol;
  };
  const Row rows[] = {{1, 1, "S^3"},          {0, 1, "E^3"},      {-1, 1, "H^3"},
                      {1, 0, "NH^{2+1}_+"},   {0, 0, "G^{2+1}"},  {-1, 0, "NH^{2+1}_-"},
                      {1, -1, "AdS^{2+1}"},   {0, -1, "M^{2+1}"}, {-1, -1, "dS^{2+1}"}};
  std::vector<SpaceCatalogEntry> out;
  for (const auto& row : rows) {
    const KappaPair kp{row.k1, row.k2};
    SpaceCatalogEntry e;
    e.name = classify_space(kp);
    e.symbol = row.symbol;
    e.algebra = classify_algebra(CKSignature({row.k1, row.k2, 1.0}));
    e.kappa = kp;
    e.metric_diagonal_symbolic = metric_diagonal_symbolic(kp);
    e.line_element = line_element_symbolic(kp);
    e.k_sectional = row.k1;
    e.k_scalar = 6.0 * row.k1;
    e.degenerate = row.k2 == 0.0;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ckgeo
