#include "ckgeo/kappa_trig.hpp"

#include <cmath>

namespace ckgeo {

namespace {

constexpr double kSeriesThreshold = 1e-4;

}  // namespace

double ck_cos(double kappa, double x) {
  const double u = kappa * x * x;
  if (std::abs(u) < kSeriesThreshold) {
    // 1 - u/2! + u^2/4! - u^3/6! + u^4/8!
    return 1.0 + u * (-1.0 / 2 + u * (1.0 / 24 + u * (-1.0 / 720 + u / 40320)));
  }
  if (kappa > 0) return std::cos(std::sqrt(kappa) * x);
  return std::cosh(std::sqrt(-kappa) * x);
}

double ck_sin(double kappa, double x) {
  const double u = kappa * x * x;
  if (std::abs(u) < kSeriesThreshold) {
    return x * (1.0 + u * (-1.0 / 6 + u * (1.0 / 120 + u * (-1.0 / 5040 + u / 362880))));
  }
  if (kappa > 0) {
    const double s = std::sqrt(kappa);
    return std::sin(s * x) / s;
  }
  const double s = std::sqrt(-kappa);
  return std::sinh(s * x) / s;
}

double ck_tan(double kappa, double x) { return ck_sin(kappa, x) / ck_cos(kappa, x); }

double ck_arctan(double kappa, double t) {
  const double u = kappa * t * t;
  if (std::abs(u) < kSeriesThreshold) {
    return t * (1.0 + u * (-1.0 / 3 + u * (1.0 / 5 + u * (-1.0 / 7 + u / 9))));
  }
  if (kappa > 0) {
    const double s = std::sqrt(kappa);
    return std::atan(s * t) / s;
  }
  const double s = std::sqrt(-kappa);
  return std::atanh(s * t) / s;
}

double sinhc(double x) {
  if (std::abs(x) < 1e-6) return 1.0 + x * x / 6.0 + x * x * x * x / 120.0;
  return std::sinh(x) / x;
}

double expm1_over(double z, double a) {
  const double u = z * a;
  if (std::abs(u) < 1e-8) return a * (1.0 + u / 2.0 + u * u / 6.0);
  return std::expm1(u) / z;
}

double log1p_over(double z, double u) {
  const double v = z * u;
  if (std::abs(v) < 1e-8) return u * (1.0 - v / 2.0 + v * v / 3.0);
  return std::log1p(v) / z;
}

}  // namespace ckgeo
