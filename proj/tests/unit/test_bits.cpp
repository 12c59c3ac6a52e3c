#include <doctest.h>

#include "../support/oracles.hpp"
#include "wmark/bits.hpp"
#include "wmark/error.hpp"

using namespace wmark;

TEST_SUITE("bits") {

TEST_CASE("words serialize MSB-first") {
  PcmBuffer buf;
  buf.words = {1};
  BitStream s = pcm_to_bits(buf);
  REQUIRE(s.bits.size() == 16);
  CHECK(s.origin == BitOrigin::pcm16_msb_first);
  for (size_t i = 0; i < 15; ++i) CHECK(s.bits[i] == 0);
  CHECK(s.bits[15] == 1);

  buf.words = {-32768};  // 0x8000
  s = pcm_to_bits(buf);
  CHECK(s.bits[0] == 1);
  for (size_t i = 1; i < 16; ++i) CHECK(s.bits[i] == 0);
}

TEST_CASE("bits_to_pcm inverts pcm_to_bits") {
  oracles::TestRng rng(81);
  PcmBuffer buf = rng.pcm(257, 22050);
  BitStream s = pcm_to_bits(buf);
  PcmBuffer back = bits_to_pcm(s.bits, buf.sample_rate);
  CHECK(back.words == buf.words);
  CHECK(back.sample_rate == buf.sample_rate);
}

TEST_CASE("bits_to_pcm rejects partial words") {
  std::vector<uint8_t> bits(17, 0);
  CHECK_THROWS_AS(bits_to_pcm(bits, 44100), LengthMismatch);
}

TEST_CASE("pack/unpack round trip at every padding offset") {
  oracles::TestRng rng(82);
  for (size_t n = 0; n <= 24; ++n) {
    std::vector<uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<uint8_t>(rng.index(2));
    auto packed = pack_bits(bits);
    CHECK(packed.size() == (n + 7) / 8);
    CHECK(unpack_bits(packed, n) == bits);
  }
}

TEST_CASE("packing is MSB-first within each byte") {
  std::vector<uint8_t> bits = {1, 0, 0, 0, 0, 0, 0, 1, 1};
  auto packed = pack_bits(bits);
  REQUIRE(packed.size() == 2);
  CHECK(packed[0] == 0x81);
  CHECK(packed[1] == 0x80);  // final byte zero-padded
}

TEST_CASE("bit-file length recovery for protected-stream sizes") {
  oracles::TestRng rng(83);
  for (size_t k : {0u, 1u, 2u, 7u, 100u, 3352u}) {
    BitStream s;
    s.bits.resize(45 + 15 * k);
    for (auto& b : s.bits) b = static_cast<uint8_t>(rng.index(2));
    BitStream back = decode_bit_file(encode_bit_file(s));
    CHECK(back.bits == s.bits);
  }
}

TEST_CASE("files that fit no 45+15k length are rejected") {
  CHECK_THROWS_AS(decode_bit_file(std::vector<uint8_t>{}), MalformedStream);
  CHECK_THROWS_AS(decode_bit_file(std::vector<uint8_t>(2, 0xff)), MalformedStream);
  // 14 bytes = 112 bits; the window (104, 112] contains 105 = 15*7 >= 45, fine;
  // 13 bytes = 104 bits; window (96, 104] has no multiple of 15.
  CHECK_NOTHROW(decode_bit_file(std::vector<uint8_t>(14, 0)));
  CHECK_THROWS_AS(decode_bit_file(std::vector<uint8_t>(13, 0)), MalformedStream);
}

}  // TEST_SUITE
