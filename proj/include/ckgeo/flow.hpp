#pragma once

// Hamiltonian flow with the implicit midpoint rule: symplectic, symmetric and
// second order, usable for non-separable (position-dependent mass) Hamiltonians.

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace ckgeo {

using Hamiltonian = std::function<double(const Eigen::VectorXd& q, const Eigen::VectorXd& p)>;
using CoordinateGuard = std::function<bool(const Eigen::VectorXd& q)>;

struct FlowState {
  Eigen::VectorXd coords;
  Eigen::VectorXd momenta;
  double time = 0.0;
  double hamiltonian_value = 0.0;
};

enum class FlowScheme {
  implicit_midpoint,
  /// Triple-jump composition of implicit midpoint steps; fourth order, still
  /// symplectic and symmetric.
  composed_midpoint4,
};

struct FlowOptions {
  double tolerance = 1e-13;
  int max_iterations = 50;
  /// Relative step of the 4th-order gradient stencil.
  double gradient_step = 1e-3;
  FlowScheme scheme = FlowScheme::implicit_midpoint;
  CoordinateGuard domain_guard;
};

enum class FlowStatus { completed, not_converged, left_domain };

struct FlowResult {
  /// initial state followed by one state per accepted step.
  std::vector<FlowState> states;
  FlowStatus status = FlowStatus::completed;
  std::string message;

  bool ok() const { return status == FlowStatus::completed; }
};

/// (dH/dq, dH/dp) by fourth-order central differences.
std::pair<Eigen::VectorXd, Eigen::VectorXd> hamiltonian_gradient(const Hamiltonian& h, const Eigen::VectorXd& q,
                                                                 const Eigen::VectorXd& p, double relative_step);

/// Integrates `steps` steps of size dt. Stops early, keeping every valid
/// state, when the fixed-point iteration fails or q leaves the guard.
/// Throws std::invalid_argument for dt <= 0 and DomainError when the
/// initial state is already outside the guard.
FlowResult geodesic_flow(const Hamiltonian& h, const FlowState& initial, double dt, int steps,
                         const FlowOptions& options = {});

/// Same state with p -> -p (time reversal for Hamiltonians even in p).
FlowState reverse_momenta(const FlowState& s);

}  // namespace ckgeo
