#include "ckgeo/sweep.hpp"

#include <algorithm>

namespace ckgeo {

void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

AlgebraCheck check_algebra(const CKSignature& sig) {
  AlgebraCheck c;
  c.kappa = sig.kappa();
  c.name = classify_algebra(sig);
  const auto sc = build_structure_constants(sig);
  c.jacobi = jacobi_residual(sc);
  const auto rep = vector_representation(sig);
  c.invariance = invariance_residual(rep);
  c.representation = representation_residual(rep, sc);
  for (int m = 1; m <= sig.n(); ++m) {
    const auto target = build_structure_constants(sig.with_kappa(m, 0.0));
    c.contraction = std::max(c.contraction, contract_gamma(sc, m, 0.0).distance(target));
  }
  return c;
}

std::vector<AlgebraCheck> algebra_sweep(int n, Execution exec) {
  const auto sigs = sign_sweep(n);
  return map_indexed<AlgebraCheck>(sigs.size(), exec, [&](std::size_t i) { return check_algebra(sigs[i]); });
}

std::vector<CurvatureReport> curvature_batch(const MetricField& metric, const std::vector<Point>& points,
                                             Execution exec, const FiniteDifference& fd) {
  return map_indexed<CurvatureReport>(points.size(), exec,
                                      [&](std::size_t i) { return curvature(metric, points[i], fd); });
}

std::vector<BracketResiduals> bracket_residual_batch(double z, const std::vector<PhasePoint>& points, Execution exec,
                                                     const std::vector<int>& signs) {
  return map_indexed<BracketResiduals>(points.size(), exec,
                                       [&](std::size_t i) { return bracket_residuals(z, points[i], signs); });
}

std::vector<FlowResult> flow_batch(const Hamiltonian& h, const std::vector<FlowState>& initial, double dt, int steps,
                                   const FlowOptions& options, Execution exec) {
  return map_indexed<FlowResult>(initial.size(), exec,
                                 [&](std::size_t i) { return geodesic_flow(h, initial[i], dt, steps, options); });
}

}  // namespace ckgeo
