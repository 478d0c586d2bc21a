#include <hypersf/gamma.hpp>
#include <hypersf/geometry.hpp>
#include <hypersf/hypergeometric.hpp>
#include <hypersf/meijer_g.hpp>
#include <hypersf/mellin_barnes.hpp>
#include <hypersf/quadrature.hpp>

#include <benchmark/benchmark.h>

using namespace hypersf;

namespace {

const GeometryParams kCap{1.2, 1.0, 2.0, 1.0};

void BM_LogGamma(benchmark::State& state) {
  cplx z(3.7, -12.5);
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_LogGamma);

void BM_Hyp2F1Series(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hyp2f1(0.5, 1.0 / 3.0, 1.5, 0.8));
}
BENCHMARK(BM_Hyp2F1Series);

void BM_Mb1F0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mb_1f0(0.5, -3.0));
}
BENCHMARK(BM_Mb1F0);

void BM_KernelDecomposition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g2233_area_kernel(1, 1, 4.0));
}
BENCHMARK(BM_KernelDecomposition);

void BM_KernelMellinBarnes(benchmark::State& state) {
  const GSpec g = area_kernel_spec(1, 1, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(mb_meijer_g(g.a, g.b, g.m, g.n, g.argument));
}
BENCHMARK(BM_KernelMellinBarnes)->Unit(benchmark::kMillisecond);

void BM_AreaClosed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(surface_area_closed(kCap));
}
BENCHMARK(BM_AreaClosed)->Unit(benchmark::kMillisecond);

void BM_AreaTripleSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(surface_area_triple_sum(kCap));
}
BENCHMARK(BM_AreaTripleSum)->Unit(benchmark::kMillisecond);

void BM_AreaOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(surface_integral_oracle(kCap));
}
BENCHMARK(BM_AreaOracle)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
