#include <benchmark/benchmark.h>

#include <random>

#include "smp/linalg.hpp"
#include "smp/passage.hpp"
#include "smp/sim.hpp"
#include "helpers.hpp"

namespace {

void BM_FirstMoment(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(12345);
  smp::Matrix p = testutil::random_dense_stochastic(rng, m);
  smp::SmpModel model = testutil::random_moment_model(rng, p, 1);
  for (auto _ : state) {
    auto mu = smp::passage::first_moment(model, 0);
    benchmark::DoNotOptimize(mu);
  }
}
BENCHMARK(BM_FirstMoment)->Arg(4)->Arg(16)->Arg(64)->Arg(128);

void BM_HigherMoments(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(23456);
  smp::Matrix p = testutil::random_dense_stochastic(rng, m);
  smp::SmpModel model = testutil::random_moment_model(rng, p, 4);
  for (auto _ : state) {
    auto pm = smp::passage::higher_moments(model, 0, 4);
    benchmark::DoNotOptimize(pm);
  }
}
BENCHMARK(BM_HigherMoments)->Arg(4)->Arg(16)->Arg(64);

void BM_SpectralRadius(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(34567);
  smp::Matrix p = testutil::random_dense_stochastic(rng, m);
  for (auto _ : state) {
    double rho = smp::linalg::spectral_radius(p);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_SpectralRadius)->Arg(4)->Arg(16)->Arg(64)->Arg(128);

void BM_SimulateTrace(benchmark::State& state) {
  smp::SmpModel model = testutil::example_model_exponential();
  smp::sim::SimConfig cfg;
  cfg.seed = 7;
  cfg.replications = state.range(0);
  for (auto _ : state) {
    auto trace = smp::sim::simulate_trace(model, cfg);
    benchmark::DoNotOptimize(trace);
  }
}
BENCHMARK(BM_SimulateTrace)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
