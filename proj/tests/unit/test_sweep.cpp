#include "ckgeo/ck_space.hpp"
#include "ckgeo/errors.hpp"
#include "ckgeo/sweep.hpp"

#include "support.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>

using namespace ckgeo;

TEST_CASE("for_each_index visits every index once") {
  for (auto exec : {Execution::serial, Execution::parallel}) {
    std::vector<std::atomic<int>> hits(1000);
    for_each_index(hits.size(), exec, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("the lowest failing index is rethrown") {
  for (auto exec : {Execution::serial, Execution::parallel}) {
    try {
      for_each_index(200, exec, [](std::size_t i) {
        if (i % 50 == 17) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "17");
    }
  }
}

TEST_CASE("algebra sweep is identical in both modes") {
  const auto serial = algebra_sweep(4, Execution::serial);
  const auto parallel = algebra_sweep(4, Execution::parallel);
  REQUIRE(serial.size() == 81);
  REQUIRE(parallel.size() == 81);
  const auto sigs = sign_sweep(4);
  for (std::size_t i = 0; i < 81; ++i) {
    CHECK(serial[i].kappa == sigs[i].kappa());
    CHECK(serial[i].kappa == parallel[i].kappa);
    CHECK(serial[i].name == parallel[i].name);
    CHECK(serial[i].exact());
    CHECK(parallel[i].exact());
  }
}

TEST_CASE("curvature batch is identical in both modes") {
  auto rng = testing::make_rng(50);
  const auto metric = metric_polar({-1, -1}, 3);
  std::vector<Point> points;
  for (int i = 0; i < 40; ++i) {
    points.push_back(Eigen::Vector3d(testing::uniform(rng, 0.2, 1.0), testing::uniform(rng, 0.2, 1.0), 0.5));
  }
  const auto a = curvature_batch(metric, points, Execution::serial);
  const auto b = curvature_batch(metric, points, Execution::parallel);
  REQUIRE(a.size() == points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(a[i].scalar == b[i].scalar);
    CHECK(a[i].sectional == b[i].sectional);
    CHECK(a[i].point == points[i]);
  }
  points.push_back(Eigen::Vector3d(0.0, 0.5, 0.5));
  CHECK_THROWS_AS(curvature_batch(metric, points, Execution::parallel), DomainError);
}

TEST_CASE("bracket and flow batches are identical in both modes") {
  auto rng = testing::make_rng(51);
  std::vector<PhasePoint> pts;
  for (int i = 0; i < 30; ++i) {
    pts.push_back({testing::uniform_vector(rng, 3, -1, 1), testing::uniform_vector(rng, 3, -1, 1)});
  }
  const auto ra = bracket_residual_batch(0.5, pts, Execution::serial);
  const auto rb = bracket_residual_batch(0.5, pts, Execution::parallel);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(ra[i].max() == rb[i].max());

  const DeformationParams params{1.0, 1.0, Profile::one()};
  std::vector<FlowState> init;
  for (int i = 0; i < 8; ++i) {
    FlowState s;
    s.coords = Eigen::Vector3d(0.4 + 0.05 * i, 0.9, 0.4);
    s.momenta = Eigen::Vector3d(0.02, 0.015, 0.02);
    init.push_back(s);
  }
  FlowOptions options;
  options.domain_guard = deformed_polar_guard(params);
  const auto h = geodesic_hamiltonian(params);
  const auto fa = flow_batch(h, init, 1e-3, 200, options, Execution::serial);
  const auto fb = flow_batch(h, init, 1e-3, 200, options, Execution::parallel);
  for (std::size_t i = 0; i < init.size(); ++i) {
    REQUIRE(fa[i].ok());
    CHECK(fa[i].states.back().coords == fb[i].states.back().coords);
    CHECK(fa[i].states.back().momenta == fb[i].states.back().momenta);
  }
}
