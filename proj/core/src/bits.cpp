#include "wmark/bits.hpp"

#include "wmark/error.hpp"
#include "wmark/fileio.hpp"
#include "wmark/hamming.hpp"

namespace wmark {

BitStream pcm_to_bits(const PcmBuffer& buf) {
  BitStream s;
  s.origin = BitOrigin::pcm16_msb_first;
  s.bits.reserve(buf.words.size() * 16);
  for (int16_t w : buf.words) {
    uint16_t u = static_cast<uint16_t>(w);
    for (int b = 15; b >= 0; --b) s.bits.push_back(static_cast<uint8_t>((u >> b) & 1));
  }
  return s;
}

PcmBuffer bits_to_pcm(std::span<const uint8_t> bits, uint32_t sample_rate) {
  if (bits.size() % 16 != 0)
    throw LengthMismatch("bit count is not a multiple of 16");
  PcmBuffer buf;
  buf.sample_rate = sample_rate;
  buf.words.reserve(bits.size() / 16);
  for (size_t i = 0; i < bits.size(); i += 16) {
    uint16_t u = 0;
    for (size_t b = 0; b < 16; ++b) u = static_cast<uint16_t>((u << 1) | (bits[i + b] & 1));
    buf.words.push_back(static_cast<int16_t>(u));
  }
  return buf;
}

std::vector<uint8_t> pack_bits(std::span<const uint8_t> bits) {
  std::vector<uint8_t> out((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & 1) out[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
  return out;
}

std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes, size_t bit_count) {
  if (bit_count > bytes.size() * 8)
    throw LengthMismatch("bit count exceeds packed buffer");
  std::vector<uint8_t> bits(bit_count);
  for (size_t i = 0; i < bit_count; ++i)
    bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
  return bits;
}

BitStream decode_bit_file(std::span<const uint8_t> bytes) {
  // bit count is 45 + 15k; exactly one multiple of 15 fits in the
  // zero-padding window of the final byte.
  const size_t max_bits = bytes.size() * 8;
  size_t count = (max_bits / 15) * 15;
  if (count < kProtectHeaderBits || max_bits - count >= 8)
    throw MalformedStream("no valid protected-stream length for this file size");
  BitStream s;
  s.bits = unpack_bits(bytes, count);
  s.origin = BitOrigin::raw;
  return s;
}

std::vector<uint8_t> encode_bit_file(const BitStream& stream) {
  return pack_bits(stream.bits);
}

BitStream read_bit_file(const std::filesystem::path& path) {
  return decode_bit_file(read_file(path));
}

void write_bit_file(const BitStream& stream, const std::filesystem::path& path) {
  write_file(path, encode_bit_file(stream));
}

}  // namespace wmark
