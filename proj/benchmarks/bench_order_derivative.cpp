#include <benchmark/benchmark.h>

#include "nuderiv/nuderiv.hpp"

namespace {

void BM_master_series(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const double z = static_cast<double>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::dnu_bessel_j(0.3, z, k).value);
  }
}
BENCHMARK(BM_master_series)->ArgsProduct({{1, 2, 4, 6}, {1, 5}});

void BM_master_series_negative_order(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::dnu_bessel_j(-6.3, 2.0, k).value);
  }
}
BENCHMARK(BM_master_series_negative_order)->DenseRange(1, 6);

void BM_integer_order(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::dnu_bessel_j_integer(3, 2.0, k).value);
  }
}
BENCHMARK(BM_integer_order)->DenseRange(1, 6);

void BM_first_derivative(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::dnu_bessel_j_first(0.3, 2.0));
  }
}
BENCHMARK(BM_first_derivative);

void BM_recurrence_oracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::oracle_recurrence(0.3, 2.0, k));
  }
}
BENCHMARK(BM_recurrence_oracle)->DenseRange(1, 6);

void BM_finite_difference_oracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::oracle_finite_difference(0.3, 2.0, k).value);
  }
}
BENCHMARK(BM_finite_difference_oracle)->DenseRange(1, 4);

void BM_recip_gamma_deriv(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nuderiv::recip_gamma_deriv(k, 0.37));
  }
}
BENCHMARK(BM_recip_gamma_deriv)->DenseRange(0, 6, 2);

}  // namespace

BENCHMARK_MAIN();
