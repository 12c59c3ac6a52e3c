#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace wmark {

/// Reads a whole file into memory. Throws IoFailure.
std::vector<uint8_t> read_file(const std::filesystem::path& path);

/// Writes via a temporary file in the same directory and renames it into
/// place, so a failed command never leaves partial output behind.
void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes);

}  // namespace wmark
