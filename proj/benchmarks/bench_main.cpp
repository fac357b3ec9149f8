#include <benchmark/benchmark.h>

#include <vector>

#include "ispec/eigen_enclosure.hpp"
#include "ispec/experiments.hpp"
#include "ispec/linsys.hpp"
#include "ispec/matrix_power.hpp"
#include "ispec/spectral_decomp.hpp"

namespace {

using ispec::Interval;
using ispec::IntervalMatrix;

std::vector<Interval> operands(std::size_t count) {
  ispec::Rng rng(1);
  std::vector<Interval> v;
  for (std::size_t i = 0; i < count; ++i) {
    const double m = rng.uniform(-2.0, 2.0);
    v.push_back(Interval::from_mid_rad(m, rng.uniform(0.0, 0.1)));
  }
  return v;
}

void BM_IntervalMul(benchmark::State& state) {
  const auto v = operands(1024);
  Interval acc(1.0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(acc = v[i & 1023] * v[(i + 1) & 1023]);
    ++i;
  }
}
BENCHMARK(BM_IntervalMul);

void BM_IntervalPow(benchmark::State& state) {
  const auto v = operands(1024);
  const auto k = static_cast<unsigned>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ispec::pow(v[i++ & 1023], k));
}
BENCHMARK(BM_IntervalPow)->Arg(15)->Arg(200);

void BM_MatrixProduct(benchmark::State& state) {
  ispec::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntervalMatrix a = ispec::gen_general(n, 10.0, 0.001, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_MatrixProduct)->Arg(5)->Arg(10)->Arg(20);

void BM_Krawczyk(benchmark::State& state) {
  ispec::Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntervalMatrix a = ispec::gen_general(n, 10.0, 0.001, rng);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += Interval(2.0);
  const ispec::IntervalVector b(n, Interval(1.0, 1.01));
  for (auto _ : state) benchmark::DoNotOptimize(ispec::solve_enclosure(a, b));
}
BENCHMARK(BM_Krawczyk)->Arg(5)->Arg(10)->Arg(20);

void BM_DecomposeGeneral(benchmark::State& state) {
  ispec::Rng rng(4);
  const IntervalMatrix a = ispec::gen_general(static_cast<std::size_t>(state.range(0)), 10.0,
                                              0.001, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ispec::decompose_general(a));
}
BENCHMARK(BM_DecomposeGeneral)->Arg(5)->Arg(10);

void BM_DecomposeSymmetric(benchmark::State& state) {
  ispec::Rng rng(5);
  const auto a = ispec::gen_symmetric(static_cast<std::size_t>(state.range(0)), 10.0, 0.001, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ispec::decompose_symmetric(a));
}
BENCHMARK(BM_DecomposeSymmetric)->Arg(5)->Arg(10);

void BM_PowerBinary(benchmark::State& state) {
  ispec::Rng rng(6);
  const IntervalMatrix a = ispec::gen_general(5, 10.0, 0.001, rng);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ispec::power_binary(a, k));
}
BENCHMARK(BM_PowerBinary)->Arg(15)->Arg(200);

void BM_PowerSpectral(benchmark::State& state) {
  ispec::Rng rng(6);
  const IntervalMatrix a = ispec::gen_general(5, 10.0, 0.001, rng);
  const auto d = ispec::decompose_general(a);
  if (!d) {
    state.SkipWithError("decomposition failed");
    return;
  }
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ispec::power_spectral(*d, k));
}
BENCHMARK(BM_PowerSpectral)->Arg(15)->Arg(200);

void BM_PowerCirculant(benchmark::State& state) {
  ispec::Rng rng(7);
  const auto c = ispec::gen_circulant(5, 10.0, 0.001, rng);
  const auto d = ispec::decompose_circulant(c.generator);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ispec::power_circulant(d, k));
}
BENCHMARK(BM_PowerCirculant)->Arg(15)->Arg(200);

void BM_ExperimentTrial(benchmark::State& state) {
  ispec::ExperimentConfig cfg;
  cfg.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ispec::run_comparison(cfg));
}
BENCHMARK(BM_ExperimentTrial);

}  // namespace

BENCHMARK_MAIN();
