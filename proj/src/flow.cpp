#include "ckgeo/flow.hpp"

#include "ckgeo/errors.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace ckgeo {

std::pair<Eigen::VectorXd, Eigen::VectorXd> hamiltonian_gradient(const Hamiltonian& h, const Eigen::VectorXd& q,
                                                                 const Eigen::VectorXd& p, double relative_step) {
  constexpr double kOffsets[] = {-2, -1, 1, 2};
  constexpr double kWeights[] = {1, -8, 8, -1};
  Eigen::VectorXd qq = q, pp = p;
  // Perturbs one entry of qq or pp in place; h always sees (qq, pp).
  auto partial = [&](Eigen::VectorXd& var, Eigen::Index i) {
    const double x0 = var[i];
    const double step = relative_step * std::max(1.0, std::abs(x0));
    double acc = 0.0;
    for (int s = 0; s < 4; ++s) {
      var[i] = x0 + kOffsets[s] * step;
      acc += kWeights[s] * h(qq, pp);
    }
    var[i] = x0;
    return acc / (12.0 * step);
  };
  Eigen::VectorXd dq(q.size()), dp(p.size());
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    dq[i] = partial(qq, i);
    dp[i] = partial(pp, i);
  }
  return {dq, dp};
}

namespace {

struct StepOutcome {
  bool converged = false;
  Eigen::VectorXd q, p;
  int iterations = 0;
};

StepOutcome midpoint_step(const Hamiltonian& h, const Eigen::VectorXd& q0, const Eigen::VectorXd& p0, double dt,
                          const FlowOptions& options) {
  auto [gq, gp] = hamiltonian_gradient(h, q0, p0, options.gradient_step);
  Eigen::VectorXd q = q0 + dt * gp;
  Eigen::VectorXd p = p0 - dt * gq;
  StepOutcome out;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const Eigen::VectorXd qm = 0.5 * (q0 + q);
    const Eigen::VectorXd pm = 0.5 * (p0 + p);
    auto [mq, mp] = hamiltonian_gradient(h, qm, pm, options.gradient_step);
    Eigen::VectorXd q_next = q0 + dt * mp;
    Eigen::VectorXd p_next = p0 - dt * mq;
    if (!q_next.allFinite() || !p_next.allFinite()) break;
    const double change = std::max((q_next - q).cwiseAbs().maxCoeff(), (p_next - p).cwiseAbs().maxCoeff());
    const double scale = std::max({1.0, q_next.cwiseAbs().maxCoeff(), p_next.cwiseAbs().maxCoeff()});
    q = std::move(q_next);
    p = std::move(p_next);
    out.iterations = it;
    if (change <= options.tolerance * scale) {
      out.converged = true;
      break;
    }
  }
  out.q = std::move(q);
  out.p = std::move(p);
  return out;
}

}  // namespace

FlowState reverse_momenta(const FlowState& s) {
  FlowState out = s;
  out.momenta = -s.momenta;
  return out;
}

FlowResult geodesic_flow(const Hamiltonian& h, const FlowState& initial, double dt, int steps,
                         const FlowOptions& options) {
  if (!(dt > 0)) throw std::invalid_argument("geodesic_flow requires dt > 0");
  if (steps < 0) throw std::invalid_argument("geodesic_flow requires steps >= 0");
  if (initial.coords.size() != initial.momenta.size()) {
    throw std::invalid_argument("coordinates and momenta differ in length");
  }
  if (options.domain_guard && !options.domain_guard(initial.coords)) {
    throw DomainError("initial state lies outside the metric domain");
  }

  // Triple jump weights for the fourth-order composition.
  const double cbrt2 = std::cbrt(2.0);
  const double outer = 1.0 / (2.0 - cbrt2);
  const double inner = -cbrt2 / (2.0 - cbrt2);

  FlowResult result;
  result.states.reserve(static_cast<std::size_t>(steps) + 1);
  FlowState state = initial;
  state.hamiltonian_value = h(state.coords, state.momenta);
  result.states.push_back(state);

  for (int step = 0; step < steps; ++step) {
    Eigen::VectorXd q = state.coords;
    Eigen::VectorXd p = state.momenta;
    bool converged = true;
    auto advance = [&](double sub_dt) {
      if (!converged) return;
      auto out = midpoint_step(h, q, p, sub_dt, options);
      converged = out.converged;
      q = std::move(out.q);
      p = std::move(out.p);
    };
    if (options.scheme == FlowScheme::implicit_midpoint) {
      advance(dt);
    } else {
      advance(outer * dt);
      advance(inner * dt);
      advance(outer * dt);
    }
    if (!converged) {
      std::ostringstream os;
      os << "fixed-point iteration did not reach " << options.tolerance << " within " << options.max_iterations
         << " iterations at t=" << state.time + dt;
      result.status = FlowStatus::not_converged;
      result.message = os.str();
      return result;
    }
    const double value = h(q, p);
    if ((options.domain_guard && !options.domain_guard(q)) || !std::isfinite(value)) {
      std::ostringstream os;
      os << "trajectory left the metric domain at t=" << state.time + dt;
      result.status = FlowStatus::left_domain;
      result.message = os.str();
      return result;
    }
    state.coords = std::move(q);
    state.momenta = std::move(p);
    state.time = initial.time + (step + 1) * dt;
    state.hamiltonian_value = value;
    result.states.push_back(state);
  }
  return result;
}

}  // namespace ckgeo
