// Serial reference versus OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "homodyn/kernels.hpp"
#include "homodyn/sparse_orbits.hpp"

using namespace homodyn;

namespace {

GroupElement golden_rep() { return reduce(slope_base(std::numbers::phi)).reduced_rep; }

std::vector<long double> times(std::int64_t n) {
  std::vector<long double> t(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = std::pow(static_cast<long double>(i + 1), 1.01L);
  return t;
}

template <auto Kernel>
void BM_sample_times(benchmark::State& state) {
  const auto rep = golden_rep();
  const auto t = times(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(rep, t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_evaluate(benchmark::State& state) {
  const auto pts = kernels::serial::sample_times(golden_rep(), times(state.range(0)));
  const auto f = height_band(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f, pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_curve_hit_flags(benchmark::State& state) {
  const auto rep = golden_rep();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(rep, 0.1, 1.0, 0.2, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_primitive_vectors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(static_cast<double>(state.range(0))));
}

template <auto Kernel>
void BM_fejer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(0.05, 1.0, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_sample_times<kernels::serial::sample_times>)->Arg(100000);
BENCHMARK(BM_sample_times<kernels::parallel::sample_times>)->Arg(100000);
BENCHMARK(BM_evaluate<kernels::serial::evaluate>)->Arg(100000);
BENCHMARK(BM_evaluate<kernels::parallel::evaluate>)->Arg(100000);
BENCHMARK(BM_curve_hit_flags<kernels::serial::curve_hit_flags>)->Arg(100000);
BENCHMARK(BM_curve_hit_flags<kernels::parallel::curve_hit_flags>)->Arg(100000);
BENCHMARK(BM_primitive_vectors<kernels::serial::primitive_vectors>)->Arg(2000);
BENCHMARK(BM_primitive_vectors<kernels::parallel::primitive_vectors>)->Arg(2000);
BENCHMARK(BM_fejer<kernels::serial::fejer_coefficients>)->Arg(2000);
BENCHMARK(BM_fejer<kernels::parallel::fejer_coefficients>)->Arg(2000);

BENCHMARK_MAIN();
