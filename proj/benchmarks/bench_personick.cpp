#include <benchmark/benchmark.h>

#include <random>

#include "personick/loss_channel.hpp"
#include "personick/personick_solver.hpp"
#include "personick/pnr_measurement.hpp"
#include "personick/search_harness.hpp"

using namespace personick;

namespace {

DensityMatrix random_density(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  return pure_to_density(PureState::normalized(v));
}

void BM_ApplyKraus(benchmark::State& state) {
  const DensityMatrix rho = random_density(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_kraus(rho, Transmissivity(0.37)));
}
BENCHMARK(BM_ApplyKraus)->Arg(3)->Arg(9)->Arg(17);

void BM_ApplyLadder(benchmark::State& state) {
  const DensityMatrix rho = random_density(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_ladder(rho, Transmissivity(0.37)));
}
BENCHMARK(BM_ApplyLadder)->Arg(3)->Arg(9)->Arg(17);

void BM_MmseTwoPoint(benchmark::State& state) {
  const PureState s = InBetweenState(2.3).embed(4);
  const PriorPdf p = PriorPdf::two_point(0.541, 0.706, 0.279);
  for (auto _ : state) benchmark::DoNotOptimize(mmse(s, p));
}
BENCHMARK(BM_MmseTwoPoint);

void BM_MmseBeta(benchmark::State& state) {
  const PureState s = InBetweenState(2.3).embed(4);
  const PriorPdf p = PriorPdf::beta(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(mmse(s, p));
}
BENCHMARK(BM_MmseBeta)->Unit(benchmark::kMillisecond);

void BM_PnrBeta(benchmark::State& state) {
  const PureState s = InBetweenState(2.3).embed(4);
  const PriorPdf p = PriorPdf::beta(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pnr_mse(s, p));
}
BENCHMARK(BM_PnrBeta)->Unit(benchmark::kMillisecond);

void BM_SampleStates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_states(1.7, static_cast<int>(state.range(0)), 200, 5));
}
BENCHMARK(BM_SampleStates)->Arg(4)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
