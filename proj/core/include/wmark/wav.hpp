#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "wmark/audio.hpp"

namespace wmark {

/// Parses a RIFF/WAVE buffer. Accepted subset: PCM format code 1, mono,
/// 16 bits per sample. Unknown chunks (LIST, ...) are skipped; anything
/// outside the subset raises UnsupportedFormat, structural damage raises
/// MalformedFile.
PcmBuffer decode_wav(std::span<const uint8_t> bytes);

/// Canonical 44-byte-header RIFF/WAVE PCM16 mono encoding.
/// decode_wav(encode_wav(b)) == b bit-exactly.
std::vector<uint8_t> encode_wav(const PcmBuffer& buf);

PcmBuffer read_wav(const std::filesystem::path& path);
void write_wav(const PcmBuffer& buf, const std::filesystem::path& path);

}  // namespace wmark
