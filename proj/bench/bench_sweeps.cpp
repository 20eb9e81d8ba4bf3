#include "ckgeo/ck_space.hpp"
#include "ckgeo/qdeform.hpp"
#include "ckgeo/sweep.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ckgeo;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

std::vector<Point> sphere_points(int count) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) {
    Point x(3);
    x << 0.2 + unit(rng), 0.3 + 2.5 * unit(rng), 6.0 * unit(rng);
    pts.push_back(x);
  }
  return pts;
}

std::vector<PhasePoint> phase_points(int n, int count) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<PhasePoint> pts;
  for (int i = 0; i < count; ++i) {
    PhasePoint pt{Eigen::VectorXd(n), Eigen::VectorXd(n)};
    for (int k = 0; k < n; ++k) {
      pt.q[k] = coord(rng);
      pt.p[k] = coord(rng);
    }
    pts.push_back(pt);
  }
  return pts;
}

}  // namespace

static void BM_AlgebraSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(algebra_sweep(4, mode(state)));
}
BENCHMARK(BM_AlgebraSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CurvatureBatch(benchmark::State& state) {
  const auto metric = metric_polar({1.0, 1.0}, 3);
  const auto pts = sphere_points(64);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_batch(metric, pts, mode(state)));
}
BENCHMARK(BM_CurvatureBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_BracketBatch(benchmark::State& state) {
  const auto pts = phase_points(5, 50);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_residual_batch(0.5, pts, mode(state)));
}
BENCHMARK(BM_BracketBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_FlowBatch(benchmark::State& state) {
  DeformationParams params;
  params.z = 1.0;
  const auto h = geodesic_hamiltonian(params);
  std::vector<FlowState> initial;
  for (int i = 0; i < 8; ++i) {
    FlowState s;
    s.coords = Eigen::Vector3d(0.5 + 0.02 * i, 0.9, 0.4);
    s.momenta = Eigen::Vector3d(0.02, 0.015, 0.02);
    initial.push_back(s);
  }
  FlowOptions options;
  options.domain_guard = deformed_polar_guard(params);
  for (auto _ : state) benchmark::DoNotOptimize(flow_batch(h, initial, 1e-3, 500, options, mode(state)));
}
BENCHMARK(BM_FlowBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
