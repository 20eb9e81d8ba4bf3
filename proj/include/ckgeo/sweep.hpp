#pragma once

// Batch kernels over independent samples. Every kernel has a serial reference
// path and an OpenMP path; both return results ordered by input index, so the
// output never depends on thread scheduling.

#include "ckgeo/ck_algebra.hpp"
#include "ckgeo/flow.hpp"
#include "ckgeo/qdeform.hpp"
#include "ckgeo/riemann.hpp"

#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace ckgeo {

enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). In parallel mode the first exception
/// (lowest index) is rethrown after all iterations finish.
void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body);

template <class Out>
std::vector<Out> map_indexed(std::size_t count, Execution exec, const std::function<Out(std::size_t)>& f) {
  std::vector<Out> out(count);
  for_each_index(count, exec, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

struct AlgebraCheck {
  std::vector<double> kappa;
  std::string name;
  double jacobi = 0.0;
  double invariance = 0.0;
  double representation = 0.0;
  /// max over m of the distance between contract_gamma(sc, m, 0) and build with kappa_m = 0.
  double contraction = 0.0;

  bool exact() const { return jacobi == 0.0 && invariance == 0.0 && representation == 0.0 && contraction == 0.0; }
};

AlgebraCheck check_algebra(const CKSignature& sig);

/// check_algebra over all 3^n sign vectors, in sign_sweep order.
std::vector<AlgebraCheck> algebra_sweep(int n, Execution exec);

std::vector<CurvatureReport> curvature_batch(const MetricField& metric, const std::vector<Point>& points,
                                             Execution exec, const FiniteDifference& fd = {});

std::vector<BracketResiduals> bracket_residual_batch(double z, const std::vector<PhasePoint>& points, Execution exec,
                                                     const std::vector<int>& signs = {});

std::vector<FlowResult> flow_batch(const Hamiltonian& h, const std::vector<FlowState>& initial, double dt, int steps,
                                   const FlowOptions& options, Execution exec);

}  // namespace ckgeo
