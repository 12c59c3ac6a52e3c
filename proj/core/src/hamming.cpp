#include "wmark/hamming.hpp"

#include <string>

#include "wmark/error.hpp"

namespace wmark {

namespace {

// 1-based codeword positions of the 11 data bits (everything that is not a
// power of two).
constexpr int kDataPositions[11] = {3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15};

constexpr size_t kHeaderBlocks = 3;          // ceil(33 / 11)
constexpr size_t kHeaderDataBits = 32;       // big-endian payload bit count

void encode_block_into(std::span<const uint8_t> data, std::vector<uint8_t>& out) {
  auto cw = hamming_encode_block(data);
  out.insert(out.end(), cw.begin(), cw.end());
}

}  // namespace

std::array<uint8_t, kHammingCodeBits> hamming_encode_block(std::span<const uint8_t> data) {
  if (data.size() != kHammingDataBits)
    throw BadBlockSize("expected 11 data bits, got " + std::to_string(data.size()));
  std::array<uint8_t, kHammingCodeBits> cw{};
  for (size_t i = 0; i < kHammingDataBits; ++i)
    cw[static_cast<size_t>(kDataPositions[i]) - 1] = data[i] & 1;
  for (int p : {1, 2, 4, 8}) {
    uint8_t parity = 0;
    for (int pos = 1; pos <= static_cast<int>(kHammingCodeBits); ++pos)
      if (pos & p) parity ^= cw[static_cast<size_t>(pos) - 1];
    cw[static_cast<size_t>(p) - 1] = parity;  // even parity over the covered set
  }
  return cw;
}

HammingDecodeResult hamming_decode_block(std::span<const uint8_t> codeword) {
  if (codeword.size() != kHammingCodeBits)
    throw BadBlockSize("expected 15 codeword bits, got " + std::to_string(codeword.size()));
  std::array<uint8_t, kHammingCodeBits> cw;
  for (size_t i = 0; i < kHammingCodeBits; ++i) cw[i] = codeword[i] & 1;

  // The XOR of the 1-based positions holding ones is zero for a valid
  // codeword and equals the error position after a single flip.
  int syndrome = 0;
  for (int pos = 1; pos <= static_cast<int>(kHammingCodeBits); ++pos)
    if (cw[static_cast<size_t>(pos) - 1]) syndrome ^= pos;
  if (syndrome != 0) cw[static_cast<size_t>(syndrome) - 1] ^= 1;

  HammingDecodeResult res;
  res.corrected_position = syndrome;
  for (size_t i = 0; i < kHammingDataBits; ++i)
    res.data[i] = cw[static_cast<size_t>(kDataPositions[i]) - 1];
  return res;
}

BitStream protect(const PcmBuffer& buf) {
  BitStream payload = pcm_to_bits(buf);
  const uint64_t count = payload.bits.size();
  if (count > 0xFFFFFFFFull)
    throw InvalidArgument("payload exceeds the 32-bit length header");

  // Header: 32-bit big-endian bit count, zero-padded to three 11-bit blocks.
  std::vector<uint8_t> header_bits(kHeaderBlocks * kHammingDataBits, 0);
  for (size_t b = 0; b < kHeaderDataBits; ++b)
    header_bits[b] = static_cast<uint8_t>((count >> (kHeaderDataBits - 1 - b)) & 1);

  BitStream out;
  out.origin = BitOrigin::raw;
  const size_t payload_blocks = (payload.bits.size() + kHammingDataBits - 1) / kHammingDataBits;
  out.bits.reserve(kProtectHeaderBits + payload_blocks * kHammingCodeBits);

  for (size_t b = 0; b < kHeaderBlocks; ++b)
    encode_block_into(std::span(header_bits).subspan(b * kHammingDataBits, kHammingDataBits),
                      out.bits);

  std::vector<uint8_t> block(kHammingDataBits, 0);
  for (size_t b = 0; b < payload_blocks; ++b) {
    const size_t off = b * kHammingDataBits;
    const size_t take = std::min(kHammingDataBits, payload.bits.size() - off);
    std::fill(block.begin(), block.end(), 0);
    std::copy_n(payload.bits.begin() + static_cast<ptrdiff_t>(off), take, block.begin());
    encode_block_into(block, out.bits);
  }
  return out;
}

PcmBuffer unprotect(const BitStream& stream, uint32_t sample_rate, UnprotectStats* stats) {
  const size_t n = stream.bits.size();
  if (n < kProtectHeaderBits || (n - kProtectHeaderBits) % kHammingCodeBits != 0)
    throw MalformedStream("stream length is not 45 + 15k bits");
  const size_t payload_blocks = (n - kProtectHeaderBits) / kHammingCodeBits;

  size_t corrected = 0;
  std::vector<uint8_t> header_bits;
  header_bits.reserve(kHeaderBlocks * kHammingDataBits);
  for (size_t b = 0; b < kHeaderBlocks; ++b) {
    auto res = hamming_decode_block(
        std::span(stream.bits).subspan(b * kHammingCodeBits, kHammingCodeBits));
    if (res.corrected_position != 0) ++corrected;
    header_bits.insert(header_bits.end(), res.data.begin(), res.data.end());
  }
  uint64_t count = 0;
  for (size_t b = 0; b < kHeaderDataBits; ++b) count = (count << 1) | header_bits[b];

  const uint64_t expected_blocks =
      (count + kHammingDataBits - 1) / kHammingDataBits;
  if (count % 16 != 0 || expected_blocks != payload_blocks)
    throw MalformedStream("header bit count is inconsistent with the stream length");

  std::vector<uint8_t> payload;
  payload.reserve(payload_blocks * kHammingDataBits);
  for (size_t b = 0; b < payload_blocks; ++b) {
    auto res = hamming_decode_block(std::span(stream.bits).subspan(
        kProtectHeaderBits + b * kHammingCodeBits, kHammingCodeBits));
    if (res.corrected_position != 0) ++corrected;
    payload.insert(payload.end(), res.data.begin(), res.data.end());
  }
  payload.resize(count);  // strip final-block padding

  if (stats) stats->corrected_blocks = corrected;
  return bits_to_pcm(payload, sample_rate);
}

}  // namespace wmark
