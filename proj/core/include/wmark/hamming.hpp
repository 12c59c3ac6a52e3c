#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "wmark/audio.hpp"
#include "wmark/bits.hpp"

namespace wmark {

inline constexpr size_t kHammingDataBits = 11;
inline constexpr size_t kHammingCodeBits = 15;
inline constexpr size_t kProtectHeaderBits = 45;  // three coded 11-bit blocks

/// Hamming(15,11), positional layout: parity bits sit at 1-based codeword
/// positions 1, 2, 4, 8; data bits fill the remaining positions in order.
/// Each parity bit makes even parity over every position whose index has
/// that parity's bit set, so the syndrome of a damaged codeword equals the
/// 1-based error position.
std::array<uint8_t, kHammingCodeBits> hamming_encode_block(std::span<const uint8_t> data);

struct HammingDecodeResult {
  std::array<uint8_t, kHammingDataBits> data;
  int corrected_position = 0;  // 0 = clean codeword, else 1..15
};

HammingDecodeResult hamming_decode_block(std::span<const uint8_t> codeword);

struct UnprotectStats {
  size_t corrected_blocks = 0;  // header blocks included
};

/// Words serialized MSB-first, split into 11-bit blocks (final block
/// zero-padded), each block Hamming-encoded. A 32-bit big-endian count of
/// unencoded payload bits, itself coded as three blocks (45 bits), is
/// prepended so unprotect can strip the padding.
BitStream protect(const PcmBuffer& buf);

/// Inverse of protect with single-error correction per block. Throws
/// MalformedStream when the length is not 45 + 15k or the decoded header
/// count is inconsistent with k.
PcmBuffer unprotect(const BitStream& stream, uint32_t sample_rate = 44100,
                    UnprotectStats* stats = nullptr);

}  // namespace wmark
