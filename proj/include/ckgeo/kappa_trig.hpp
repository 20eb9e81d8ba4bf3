#pragma once

namespace ckgeo {

// Curvature-labelled trigonometry: cos/1/cosh and sin/x/sinh depending on
// the sign of kappa. Near kappa*x^2 == 0 the even/odd power series is used so
// both functions are smooth in kappa across zero.

double ck_cos(double kappa, double x);
double ck_sin(double kappa, double x);

/// ck_sin / ck_cos.
double ck_tan(double kappa, double x);

/// Principal inverse of ck_tan: atan(sqrt(k) t)/sqrt(k), t, atanh(sqrt(-k) t)/sqrt(-k).
double ck_arctan(double kappa, double t);

/// sinh(x)/x with its removable singularity at 0.
double sinhc(double x);

/// expm1(z a) / z, continuous at z == 0 (value a).
double expm1_over(double z, double a);

/// log1p(z u) / z, continuous at z == 0 (value u).
double log1p_over(double z, double u);

}  // namespace ckgeo
