#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "wmark/channel.hpp"
#include "wmark/error.hpp"

using namespace wmark;

namespace {

BitStream zero_bits(size_t n) {
  BitStream s;
  s.bits.assign(n, 0);
  return s;
}

ChannelSpec bitflip_spec(double p, uint64_t seed) {
  ChannelSpec spec;
  spec.model = ChannelModel::bitflip;
  spec.p = p;
  spec.seed = seed;
  return spec;
}

ChannelSpec awgn_spec(double sigma, uint64_t seed) {
  ChannelSpec spec;
  spec.model = ChannelModel::awgn;
  spec.sigma = sigma;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("p=0 is the identity") {
  oracles::TestRng rng(101);
  BitStream s;
  for (int i = 0; i < 500; ++i) s.bits.push_back(static_cast<uint8_t>(rng.index(2)));
  CHECK(apply_bitflip(s, bitflip_spec(0.0, 9)).bits == s.bits);
}

TEST_CASE("p=1 flips every bit") {
  oracles::TestRng rng(102);
  BitStream s;
  for (int i = 0; i < 500; ++i) s.bits.push_back(static_cast<uint8_t>(rng.index(2)));
  BitStream out = apply_bitflip(s, bitflip_spec(1.0, 9));
  for (size_t i = 0; i < s.bits.size(); ++i) CHECK(out.bits[i] == (s.bits[i] ^ 1));
}

TEST_CASE("flip count at p=0.001 over 1e6 bits: binomial bound and frozen value") {
  BitStream s = zero_bits(1000000);
  BitStream out = apply_bitflip(s, bitflip_spec(0.001, 42));
  size_t flips = 0;
  for (size_t i = 0; i < s.bits.size(); ++i) flips += out.bits[i] != s.bits[i];
  CHECK(flips >= 800);   // +/- 6 sigma of the binomial mean 1000
  CHECK(flips <= 1200);
  CHECK(flips == 995);   // pinned per-seed value, guards generator drift
}

TEST_CASE("bitflip is deterministic per seed") {
  oracles::TestRng rng(103);
  BitStream s;
  for (int i = 0; i < 4096; ++i) s.bits.push_back(static_cast<uint8_t>(rng.index(2)));
  BitStream a = apply_bitflip(s, bitflip_spec(0.25, 77));
  BitStream b = apply_bitflip(s, bitflip_spec(0.25, 77));
  BitStream c = apply_bitflip(s, bitflip_spec(0.25, 78));
  CHECK(a.bits == b.bits);
  CHECK(a.bits != c.bits);
}

TEST_CASE("sigma=0 is the identity") {
  oracles::TestRng rng(104);
  AudioClip clip = rng.quantized_clip(1000, 0.9);
  AudioClip out = apply_awgn(clip, awgn_spec(0.0, 5));
  CHECK(out.samples == clip.samples);
  CHECK(out.sample_rate == clip.sample_rate);
}

TEST_CASE("awgn empirical variance matches sigma^2 within 2%") {
  AudioClip clip;
  clip.samples.assign(1000000, 0.0);
  AudioClip out = apply_awgn(clip, awgn_spec(0.1, 7));
  double acc = 0.0;
  for (double v : out.samples) acc += v * v;
  double empirical = acc / static_cast<double>(out.samples.size());
  CHECK(empirical == doctest::Approx(0.01).epsilon(0.02));
}

TEST_CASE("awgn output is clamped to [-1, 1]") {
  AudioClip clip;
  clip.samples.assign(20000, 0.95);
  AudioClip out = apply_awgn(clip, awgn_spec(0.5, 11));
  for (double v : out.samples) {
    CHECK(v <= 1.0);
    CHECK(v >= -1.0);
  }
}

TEST_CASE("awgn is deterministic per seed") {
  oracles::TestRng rng(105);
  AudioClip clip = rng.quantized_clip(2048, 0.5);
  AudioClip a = apply_awgn(clip, awgn_spec(0.05, 123));
  AudioClip b = apply_awgn(clip, awgn_spec(0.05, 123));
  CHECK(a.samples == b.samples);
}

TEST_CASE("model mismatches are rejected") {
  BitStream s = zero_bits(8);
  AudioClip clip;
  clip.samples = {0.0};
  CHECK_THROWS_AS(apply_bitflip(s, awgn_spec(0.1, 1)), InvalidArgument);
  CHECK_THROWS_AS(apply_awgn(clip, bitflip_spec(0.1, 1)), InvalidArgument);
  ChannelSpec bad = bitflip_spec(1.5, 1);
  CHECK_THROWS_AS(apply_bitflip(s, bad), InvalidArgument);
}

}  // TEST_SUITE
