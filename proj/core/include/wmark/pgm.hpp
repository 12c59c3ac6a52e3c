#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "wmark/audio.hpp"

namespace wmark {

/// Parses a binary PGM ("P5", maxval 255). Header comments are tolerated;
/// ASCII "P2" raises UnsupportedFormat.
GrayImage decode_pgm(std::span<const uint8_t> bytes);

/// Emits "P5\n<width> <height>\n255\n" followed by the raw rows.
std::vector<uint8_t> encode_pgm(const GrayImage& img);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace wmark
