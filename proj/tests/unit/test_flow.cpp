#include "ckgeo/ck_space.hpp"
#include "ckgeo/errors.hpp"
#include "ckgeo/flow.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ckgeo;

namespace {

double free_particle(const Eigen::VectorXd&, const Eigen::VectorXd& p) { return 0.5 * p.squaredNorm(); }

// Geodesic Hamiltonian of the unit sphere in geodesic polar coordinates.
double sphere_kinetic(const Eigen::VectorXd& y, const Eigen::VectorXd& p) {
  const double s1 = std::sin(y[0]);
  const double s2 = std::sin(y[1]);
  return 0.5 * (p[0] * p[0] + (p[1] * p[1] + p[2] * p[2] / (s2 * s2)) / (s1 * s1));
}

FlowState state(Eigen::Vector3d q, Eigen::Vector3d p) {
  FlowState s;
  s.coords = q;
  s.momenta = p;
  return s;
}

Eigen::Vector4d on_sphere(const Eigen::VectorXd& y) {
  const auto a = embed(GeodesicPolarCoords::from_point(y), {1, 1});
  return {a.x[0], a.x[1], a.x[2], a.x[3]};
}

// Great-circle error at t = 1: x(t).x(0) = cos(sqrt(2H) t) on the unit sphere.
double great_circle_error(double dt, FlowScheme scheme) {
  const auto init = state({0.7, 1.0, 0.3}, {0.4, 0.3, 0.2});
  FlowOptions options;
  options.scheme = scheme;
  const auto result = geodesic_flow(sphere_kinetic, init, dt, static_cast<int>(std::lround(1.0 / dt)), options);
  REQUIRE(result.ok());
  const double speed = std::sqrt(2 * sphere_kinetic(init.coords, init.momenta));
  const auto& last = result.states.back();
  return std::abs(on_sphere(last.coords).dot(on_sphere(init.coords)) - std::cos(speed * last.time));
}

}  // namespace

TEST_CASE("gradient of a non-separable Hamiltonian") {
  const Hamiltonian h = [](const Eigen::VectorXd& q, const Eigen::VectorXd& p) {
    return q[0] * q[0] * p[1] * p[1] + std::sin(q[1]) * p[0] + std::exp(0.3 * q[0]) * p[0] * p[1];
  };
  const Eigen::Vector2d q(0.4, -0.9);
  const Eigen::Vector2d p(1.3, 0.6);
  const auto [dq, dp] = hamiltonian_gradient(h, q, p, 1e-3);
  const double e = std::exp(0.3 * q[0]);
  CHECK(dq[0] == doctest::Approx(2 * q[0] * p[1] * p[1] + 0.3 * e * p[0] * p[1]).epsilon(1e-10));
  CHECK(dq[1] == doctest::Approx(std::cos(q[1]) * p[0]).epsilon(1e-10));
  CHECK(dp[0] == doctest::Approx(std::sin(q[1]) + e * p[1]).epsilon(1e-10));
  CHECK(dp[1] == doctest::Approx(2 * q[0] * q[0] * p[1] + e * p[0]).epsilon(1e-10));
}

TEST_CASE("free motion is a straight line") {
  const auto init = state({0.1, -0.2, 0.3}, {1.0, 0.5, -0.25});
  const auto result = geodesic_flow(free_particle, init, 0.01, 500);
  REQUIRE(result.ok());
  REQUIRE(result.states.size() == 501);
  for (const auto& s : result.states) {
    CHECK(testing::max_abs(s.coords - (init.coords + s.time * init.momenta)) < 1e-12);
    CHECK(testing::max_abs(s.momenta - init.momenta) == 0.0);
  }
  CHECK(result.states.back().time == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("sphere geodesics are great circles") {
  CHECK(great_circle_error(1e-3, FlowScheme::composed_midpoint4) < 1e-9);
  CHECK(great_circle_error(1e-3, FlowScheme::implicit_midpoint) < 1e-6);
}

TEST_CASE("convergence orders") {
  const double m1 = great_circle_error(0.02, FlowScheme::implicit_midpoint);
  const double m2 = great_circle_error(0.01, FlowScheme::implicit_midpoint);
  CHECK(m1 / m2 == doctest::Approx(4.0).epsilon(0.1));
  const double c1 = great_circle_error(0.1, FlowScheme::composed_midpoint4);
  const double c2 = great_circle_error(0.05, FlowScheme::composed_midpoint4);
  CHECK(c1 / c2 == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("equatorial motion stays equatorial") {
  const auto init = state({0.5, std::numbers::pi / 2, 0.1}, {0.3, 0.0, 0.2});
  const auto result = geodesic_flow(sphere_kinetic, init, 1e-3, 2000);
  REQUIRE(result.ok());
  for (const auto& s : result.states) {
    CHECK(std::abs(s.coords[1] - std::numbers::pi / 2) < 1e-12);
    CHECK(std::abs(s.momenta[1]) < 1e-12);
  }
}

TEST_CASE("radial geodesics advance uniformly") {
  const auto init = state({0.2, 1.0, 0.3}, {0.5, 0.0, 0.0});
  const auto result = geodesic_flow(sphere_kinetic, init, 1e-3, 1000);
  REQUIRE(result.ok());
  for (const auto& s : result.states) CHECK(s.coords[0] == doctest::Approx(0.2 + 0.5 * s.time).epsilon(1e-12));
}

TEST_CASE("energy is conserved and the map is time reversible") {
  const auto init = state({0.7, 1.0, 0.3}, {0.4, 0.3, 0.2});
  const auto fwd = geodesic_flow(sphere_kinetic, init, 1e-2, 1000);
  REQUIRE(fwd.ok());
  const double h0 = fwd.states.front().hamiltonian_value;
  double drift = 0.0;
  for (const auto& s : fwd.states) drift = std::max(drift, std::abs(s.hamiltonian_value - h0) / h0);
  CHECK(drift < 1e-4);

  const auto back = geodesic_flow(sphere_kinetic, reverse_momenta(fwd.states.back()), 1e-2, 1000);
  REQUIRE(back.ok());
  const auto end = reverse_momenta(back.states.back());
  CHECK(testing::max_abs(end.coords - init.coords) < 1e-10);
  CHECK(testing::max_abs(end.momenta - init.momenta) < 1e-10);
}

TEST_CASE("invalid input and leaving the domain") {
  const auto init = state({0.2, 1.0, 0.3}, {-1.0, 0.0, 0.0});
  CHECK_THROWS_AS(geodesic_flow(sphere_kinetic, init, 0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(geodesic_flow(sphere_kinetic, init, -1e-3, 10), std::invalid_argument);

  FlowOptions options;
  options.domain_guard = [](const Eigen::VectorXd& y) { return polar_chart_contains({1, 1}, y); };
  CHECK_THROWS_AS(geodesic_flow(sphere_kinetic, state({0.0, 1.0, 0.3}, {1, 0, 0}), 1e-3, 10, options), DomainError);

  const auto result = geodesic_flow(sphere_kinetic, init, 1e-2, 100, options);
  CHECK(result.status == FlowStatus::left_domain);
  CHECK_FALSE(result.message.empty());
  CHECK(result.states.size() > 1);
  CHECK(result.states.size() < 101);
  for (const auto& s : result.states) CHECK(options.domain_guard(s.coords));
}
