#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "wmark/audio.hpp"

namespace wmark {

enum class BitOrigin { pcm16_msb_first, raw };

/// Ordered bit sequence, one byte per bit (values 0/1). When origin is
/// pcm16_msb_first the length is a multiple of 16.
struct BitStream {
  std::vector<uint8_t> bits;
  BitOrigin origin = BitOrigin::raw;

  bool operator==(const BitStream&) const = default;
};

/// Serializes each word MSB-first (two's-complement bit pattern).
BitStream pcm_to_bits(const PcmBuffer& buf);

/// Repacks 16-bit words MSB-first. Throws LengthMismatch unless
/// bits.size() is a multiple of 16.
PcmBuffer bits_to_pcm(std::span<const uint8_t> bits, uint32_t sample_rate);

/// MSB-first within each byte, final byte zero-padded.
std::vector<uint8_t> pack_bits(std::span<const uint8_t> bits);
std::vector<uint8_t> unpack_bits(std::span<const uint8_t> bytes, size_t bit_count);

/// Protected streams have no container header, so the bit count of a file
/// of B bytes is recovered as the unique 45 + 15k value in (8B-8, 8B].
/// Throws MalformedStream when no such length exists.
BitStream decode_bit_file(std::span<const uint8_t> bytes);
std::vector<uint8_t> encode_bit_file(const BitStream& stream);

BitStream read_bit_file(const std::filesystem::path& path);
void write_bit_file(const BitStream& stream, const std::filesystem::path& path);

}  // namespace wmark
