#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "wmark/audio.hpp"

namespace wmark {

/// Row-major float grid. Carries both 2D spectra and float-domain images,
/// where rows = image height and cols = image width.
struct Grid {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> data;

  Grid() = default;
  Grid(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(size_t r, size_t c) { return data[r * cols + c]; }
  double at(size_t r, size_t c) const { return data[r * cols + c]; }

  bool operator==(const Grid&) const = default;
};

/// Pixel values as floats in [0, 255].
Grid image_to_grid(const GrayImage& img);

/// Round and clamp to [0, 255]; the lossy 8-bit rendering of a float grid.
GrayImage grid_to_image(const Grid& g);

/// "DCTF" container: 16-byte header (magic "DCTF", u32 LE width, u32 LE
/// height, u32 reserved zero), then width*height float64 LE row-major.
Grid decode_grid(std::span<const uint8_t> bytes);
std::vector<uint8_t> encode_grid(const Grid& g);

Grid read_grid(const std::filesystem::path& path);
void write_grid(const Grid& g, const std::filesystem::path& path);

}  // namespace wmark
