// Serial reference kernels against their OpenMP counterparts. Set
// OMP_NUM_THREADS to control the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "ptab/enumerate.hpp"
#include "ptab/genfun.hpp"
#include "ptab/poly.hpp"
#include "ptab/sampler.hpp"

using namespace ptab;

namespace {

std::vector<BigInt> random_coefficients(int degree) {
  std::mt19937_64 rng(1);
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) {
    v = 0;
    for (int w = 0; w < 4; ++w) v = (v << 64) + BigInt(std::to_string(rng()));
  }
  return c;
}

void BM_TaylorShiftReference(benchmark::State& state) {
  const auto coeffs = random_coefficients(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto c = coeffs;
    kernels::taylor_shift_reference(c);
    benchmark::DoNotOptimize(c);
  }
}

void BM_TaylorShiftConvolution(benchmark::State& state, Exec exec) {
  const auto coeffs = random_coefficients(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::taylor_shift_convolution(coeffs, exec));
}

void BM_CoefficientSweep(benchmark::State& state, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(CoefficientSweep(static_cast<int>(state.range(0)), 8, exec));
}

void BM_CornerDistribution(benchmark::State& state, Exec exec) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(corner_distribution(static_cast<int>(state.range(0)), Family::permutation, exec));
  }
}

void BM_SampleCornerStats(benchmark::State& state, Exec exec) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_corner_stats(static_cast<int>(state.range(0)), 20000, 42, exec));
  }
}

}  // namespace

BENCHMARK(BM_TaylorShiftReference)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TaylorShiftConvolution, serial, Exec::serial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TaylorShiftConvolution, parallel, Exec::parallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CoefficientSweep, serial, Exec::serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CoefficientSweep, parallel, Exec::parallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CornerDistribution, serial, Exec::serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CornerDistribution, parallel, Exec::parallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SampleCornerStats, serial, Exec::serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SampleCornerStats, parallel, Exec::parallel)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
