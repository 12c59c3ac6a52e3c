#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wmark/dct.hpp"

namespace {

std::vector<double> random_signal(size_t n) {
  std::mt19937_64 eng(n);
  std::vector<double> x(n);
  for (auto& v : x) v = static_cast<double>(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  return x;
}

void BM_Dct1dPow2(benchmark::State& state) {
  auto x = random_signal(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    auto f = wmark::dct1d(x);
    benchmark::DoNotOptimize(f);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dct1dPow2)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oNLogN);

void BM_Dct1dOddLength(benchmark::State& state) {
  // off-by-one sizes force the Bluestein path
  auto x = random_signal(static_cast<size_t>(state.range(0)) + 1);
  for (auto _ : state) {
    auto f = wmark::dct1d(x);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Dct1dOddLength)->RangeMultiplier(4)->Range(256, 65536);

void BM_RoundTrip1d(benchmark::State& state) {
  auto x = random_signal(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    auto back = wmark::idct1d(wmark::dct1d(x));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_RoundTrip1d)->Arg(4096)->Arg(32768);

void BM_Dct2d(benchmark::State& state) {
  size_t dim = static_cast<size_t>(state.range(0));
  wmark::Grid g(dim, dim);
  std::mt19937_64 eng(dim);
  for (auto& v : g.data) v = static_cast<double>(eng() % 256);
  for (auto _ : state) {
    auto f = wmark::dct2d(g);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Dct2d)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
