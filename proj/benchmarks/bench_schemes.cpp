#include <benchmark/benchmark.h>

#include <random>

#include "wmark/schemes.hpp"

namespace {

wmark::AudioClip random_clip(size_t n, uint64_t seed) {
  std::mt19937_64 eng(seed);
  wmark::AudioClip clip;
  clip.samples.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    auto w = static_cast<int16_t>(eng() & 0xffff);
    clip.samples.push_back(w / 32768.0 * 0.5);
  }
  return clip;
}

void BM_EmbedInterleave(benchmark::State& state) {
  auto cover = random_clip(static_cast<size_t>(state.range(0)), 1);
  auto wm = random_clip(static_cast<size_t>(state.range(0)) / 8, 2);
  for (auto _ : state) {
    auto res = wmark::embed_interleave(cover, wm);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_EmbedInterleave)->Range(4096, 262144);

void BM_EmbedDctAa(benchmark::State& state) {
  auto cover = random_clip(static_cast<size_t>(state.range(0)), 3);
  auto wm = random_clip(static_cast<size_t>(state.range(0)) / 8, 4);
  for (auto _ : state) {
    auto res = wmark::embed_dct_aa(cover, wm, 1.0);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_EmbedDctAa)->Range(4096, 65536);

void BM_ExtractDctAa(benchmark::State& state) {
  auto cover = random_clip(static_cast<size_t>(state.range(0)), 5);
  auto wm = random_clip(static_cast<size_t>(state.range(0)) / 8, 6);
  auto res = wmark::embed_dct_aa(cover, wm, 1.0);
  for (auto _ : state) {
    auto out = wmark::extract_dct_aa(res.marked, res.key);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ExtractDctAa)->Range(4096, 65536);

}  // namespace
