#include <doctest.h>

#include <bitset>

#include "../support/oracles.hpp"
#include "wmark/error.hpp"
#include "wmark/hamming.hpp"

using namespace wmark;

namespace {

std::vector<uint8_t> data_bits_of(unsigned word) {
  std::vector<uint8_t> bits(11);
  for (size_t i = 0; i < 11; ++i) bits[i] = (word >> (10 - i)) & 1;
  return bits;
}

int syndrome_of(std::span<const uint8_t> cw) {
  int s = 0;
  for (int pos = 1; pos <= 15; ++pos)
    if (cw[pos - 1] & 1) s ^= pos;
  return s;
}

}  // namespace

TEST_SUITE("hamming") {

TEST_CASE("zero data encodes to the zero codeword") {
  std::vector<uint8_t> zeros(11, 0);
  auto cw = hamming_encode_block(zeros);
  for (auto b : cw) CHECK(b == 0);
}

TEST_CASE("all-ones data: covering-set oracle fixes the codeword") {
  // Each parity covers 8 of the 15 positions: itself plus 7 data bits, so
  // with all data ones every parity bit is 1 and the codeword is all ones.
  std::vector<uint8_t> ones(11, 1);
  auto expected = oracles::hamming_encode_oracle(ones);
  CHECK(expected == std::array<uint8_t, 15>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(hamming_encode_block(ones) == expected);
}

TEST_CASE("implementation matches the covering-set oracle for all 2048 words") {
  for (unsigned w = 0; w < 2048; ++w) {
    auto bits = data_bits_of(w);
    CHECK(hamming_encode_block(bits) == oracles::hamming_encode_oracle(bits));
  }
}

TEST_CASE("every codeword has syndrome zero and decodes cleanly") {
  for (unsigned w = 0; w < 2048; ++w) {
    auto bits = data_bits_of(w);
    auto cw = hamming_encode_block(bits);
    CHECK(syndrome_of(cw) == 0);
    auto res = hamming_decode_block(cw);
    CHECK(res.corrected_position == 0);
    CHECK(std::equal(bits.begin(), bits.end(), res.data.begin()));
  }
}

TEST_CASE("exhaustive single-error correction: 2048 x 15 cases") {
  for (unsigned w = 0; w < 2048; ++w) {
    auto bits = data_bits_of(w);
    auto cw = hamming_encode_block(bits);
    for (int pos = 1; pos <= 15; ++pos) {
      auto damaged = cw;
      damaged[pos - 1] ^= 1;
      auto res = hamming_decode_block(damaged);
      CHECK(res.corrected_position == pos);
      CHECK(std::equal(bits.begin(), bits.end(), res.data.begin()));
    }
  }
}

TEST_CASE("double errors miscorrect but never fail") {
  auto bits = data_bits_of(0b10110011010);
  auto cw = hamming_encode_block(bits);
  auto damaged = cw;
  damaged[2] ^= 1;
  damaged[9] ^= 1;
  auto res = hamming_decode_block(damaged);
  CHECK(res.corrected_position != 0);  // some correction is attempted
  CHECK_FALSE(std::equal(bits.begin(), bits.end(), res.data.begin()));
}

TEST_CASE("minimum distance is 3 (no nonzero codeword of weight < 3)") {
  // linear code: min distance equals min weight over nonzero codewords
  for (unsigned w = 1; w < 2048; ++w) {
    auto cw = hamming_encode_block(data_bits_of(w));
    int weight = 0;
    for (auto b : cw) weight += b;
    CHECK(weight >= 3);
  }
}

TEST_CASE("block size violations raise BadBlockSize") {
  std::vector<uint8_t> ten(10, 0), sixteen(16, 0);
  CHECK_THROWS_AS(hamming_encode_block(ten), BadBlockSize);
  CHECK_THROWS_AS(hamming_decode_block(sixteen), BadBlockSize);
}

TEST_CASE("protect frames 11 words into 16 blocks plus the header") {
  oracles::TestRng rng(91);
  PcmBuffer buf = rng.pcm(11);  // 176 bits = 16 exact blocks
  BitStream s = protect(buf);
  CHECK(s.bits.size() == 45 + 16 * 15);
}

TEST_CASE("protect of an empty buffer is header-only") {
  PcmBuffer buf;
  BitStream s = protect(buf);
  CHECK(s.bits.size() == 45);
  PcmBuffer back = unprotect(s, buf.sample_rate);
  CHECK(back.words.empty());
}

TEST_CASE("protect/unprotect round trip over an error-free channel") {
  oracles::TestRng rng(92);
  for (size_t n : {1u, 2u, 10u, 11u, 12u, 301u}) {
    PcmBuffer buf = rng.pcm(n, 12345);
    PcmBuffer back = unprotect(protect(buf), 12345);
    CHECK(back.words == buf.words);
    CHECK(back.sample_rate == 12345);
  }
}

TEST_CASE("one flipped bit per block is always repaired") {
  oracles::TestRng rng(93);
  PcmBuffer buf = rng.pcm(40);
  const BitStream coded = protect(buf);
  REQUIRE(coded.bits.size() % 15 == 0);
  const size_t blocks = coded.bits.size() / 15;

  // exhaustive over in-block positions: run 15 channels, the k-th flipping
  // offset k inside every block
  for (size_t offset = 0; offset < 15; ++offset) {
    BitStream damaged = coded;
    for (size_t block = 0; block < blocks; ++block)
      damaged.bits[block * 15 + offset] ^= 1;
    UnprotectStats stats;
    PcmBuffer back = unprotect(damaged, buf.sample_rate, &stats);
    CHECK(back.words == buf.words);
    CHECK(stats.corrected_blocks == blocks);
  }

  // and one run with a random position per block
  BitStream damaged = coded;
  for (size_t block = 0; block < blocks; ++block)
    damaged.bits[block * 15 + rng.index(15)] ^= 1;
  CHECK(unprotect(damaged, buf.sample_rate).words == buf.words);
}

TEST_CASE("malformed streams are rejected") {
  oracles::TestRng rng(94);
  PcmBuffer buf = rng.pcm(8);
  BitStream good = protect(buf);

  SUBCASE("truncated") {
    BitStream bad = good;
    bad.bits.resize(bad.bits.size() - 1);
    CHECK_THROWS_AS(unprotect(bad), MalformedStream);
  }
  SUBCASE("shorter than the header") {
    BitStream bad;
    bad.bits.assign(30, 0);
    CHECK_THROWS_AS(unprotect(bad), MalformedStream);
  }
  SUBCASE("header count inconsistent with block count") {
    BitStream bad = good;
    bad.bits.insert(bad.bits.end(), 15, 0);  // extra block the header knows nothing about
    CHECK_THROWS_AS(unprotect(bad), MalformedStream);
  }
}

}  // TEST_SUITE
