#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "circnorm/circulant.hpp"
#include "circnorm/estimator.hpp"
#include "circnorm/norms.hpp"

namespace {

using namespace circnorm;

std::vector<double> random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = dist(rng);
  return x;
}

void BM_MatvecDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circulant c = make_two_param(n, -3.0, 2.0).to_circulant();
  const std::vector<double> x = random_vector(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(matvec_direct(c, x));
}
BENCHMARK(BM_MatvecDirect)->RangeMultiplier(4)->Range(64, 4096);

void BM_MatvecFft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circulant c = make_two_param(n, -3.0, 2.0).to_circulant();
  const std::vector<double> x = random_vector(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(matvec_fft(c, x));
}
BENCHMARK(BM_MatvecFft)->RangeMultiplier(4)->Range(64, 4096);

// non-power-of-two sizes go through the chirp convolution
void BM_MatvecFftMixedRadix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circulant c = make_two_param(n, -3.0, 2.0).to_circulant();
  const std::vector<double> x = random_vector(n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(matvec_fft(c, x));
}
BENCHMARK(BM_MatvecFftMixedRadix)->Arg(1000)->Arg(3000)->Arg(4095);

void BM_EigenvaluesDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circulant c = make_two_param(n, -3.0, 2.0).to_circulant();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_direct(c));
}
BENCHMARK(BM_EigenvaluesDirect)->Arg(64)->Arg(256);

void BM_EigenvaluesFft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circulant c = make_two_param(n, -3.0, 2.0).to_circulant();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_fft(c));
}
BENCHMARK(BM_EigenvaluesFft)->Arg(64)->Arg(256)->Arg(4096);

void BM_EstimateNorm4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circulant c = make_two_param(n, -3.0, 2.0).to_circulant();
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_norm_p(c, PExponent::finite(4.0)));
}
BENCHMARK(BM_EstimateNorm4)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
