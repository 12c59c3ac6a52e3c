#include <benchmark/benchmark.h>

#include <random>

#include "wmark/hamming.hpp"

namespace {

wmark::PcmBuffer random_pcm(size_t words) {
  std::mt19937_64 eng(words);
  wmark::PcmBuffer buf;
  buf.words.reserve(words);
  for (size_t i = 0; i < words; ++i)
    buf.words.push_back(static_cast<int16_t>(eng() & 0xffff));
  return buf;
}

void BM_Protect(benchmark::State& state) {
  auto buf = random_pcm(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    auto s = wmark::protect(buf);
    benchmark::DoNotOptimize(s);
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0) * 2);
}
BENCHMARK(BM_Protect)->Range(1024, 65536);

void BM_Unprotect(benchmark::State& state) {
  auto buf = random_pcm(static_cast<size_t>(state.range(0)));
  auto coded = wmark::protect(buf);
  for (auto _ : state) {
    auto back = wmark::unprotect(coded, buf.sample_rate);
    benchmark::DoNotOptimize(back);
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0) * 2);
}
BENCHMARK(BM_Unprotect)->Range(1024, 65536);

void BM_EncodeBlock(benchmark::State& state) {
  std::array<uint8_t, 11> data{1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0};
  for (auto _ : state) {
    auto cw = wmark::hamming_encode_block(data);
    benchmark::DoNotOptimize(cw);
  }
}
BENCHMARK(BM_EncodeBlock);

}  // namespace
