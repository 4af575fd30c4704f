#include <benchmark/benchmark.h>

#include <vector>

#include "rmt/ensemble.hpp"

namespace {

rmt::EnsembleSpec gaussian_spec(int n, int beta) {
  rmt::EnsembleSpec spec;
  spec.kind = rmt::EnsembleKind::linear;
  spec.n = n;
  spec.beta = beta;
  spec.envelope = rmt::Envelope::gaussian_trace(0.5);
  return spec;
}

void bm_log_density_linear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = gaussian_spec(n, 2);
  const auto density = rmt::make_log_density(spec);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = 0.3 * k - 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(density(x));
}
BENCHMARK(bm_log_density_linear)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_log_density_group_compact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::EnsembleSpec spec;
  spec.kind = rmt::EnsembleKind::group_compact;
  spec.group = rmt::CompactGroup::sp;
  spec.n = n;
  const auto density = rmt::make_log_density(spec);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(k)] = 0.2 * (k + 1);
  for (auto _ : state) benchmark::DoNotOptimize(density(x));
}
BENCHMARK(bm_log_density_group_compact)->Arg(4)->Arg(8)->Arg(16);

void bm_sample_coords_gaussian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = gaussian_spec(n, 2);
  rmt::Rng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rmt::sample_coords(spec, rng));
}
BENCHMARK(bm_sample_coords_gaussian)->Arg(8)->Arg(32)->Arg(64);

void bm_sample_coords_symspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rmt::EnsembleSpec spec;
  spec.kind = rmt::EnsembleKind::sym_space_compact_delta;
  spec.family = rmt::LinearFamily::indefinite;
  spec.n = n;
  spec.m = n + 1;
  spec.beta = 2;
  rmt::Rng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rmt::sample_coords(spec, rng));
}
BENCHMARK(bm_sample_coords_symspace)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
