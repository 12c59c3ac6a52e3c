#include "wmark/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

#include "wmark/error.hpp"
#include "wmark/fileio.hpp"

namespace wmark {

namespace {

constexpr char kMagic[4] = {'D', 'C', 'T', 'F'};

uint32_t get_u32(std::span<const uint8_t> b, size_t pos) {
  return static_cast<uint32_t>(b[pos]) | (static_cast<uint32_t>(b[pos + 1]) << 8) |
         (static_cast<uint32_t>(b[pos + 2]) << 16) |
         (static_cast<uint32_t>(b[pos + 3]) << 24);
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

}  // namespace

Grid image_to_grid(const GrayImage& img) {
  if (img.pixels.size() != static_cast<size_t>(img.width) * img.height)
    throw DimensionMismatch("pixel count does not match dimensions");
  Grid g(img.height, img.width);
  for (size_t i = 0; i < img.pixels.size(); ++i) g.data[i] = img.pixels[i];
  return g;
}

GrayImage grid_to_image(const Grid& g) {
  GrayImage img;
  img.width = static_cast<uint32_t>(g.cols);
  img.height = static_cast<uint32_t>(g.rows);
  img.pixels.reserve(g.data.size());
  for (double v : g.data) {
    long long p = std::llround(v);
    img.pixels.push_back(static_cast<uint8_t>(std::clamp(p, 0LL, 255LL)));
  }
  return img;
}

Grid decode_grid(std::span<const uint8_t> bytes) {
  if (bytes.size() < 16) throw MalformedFile("grid file too small");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw MalformedFile("bad grid magic");
  uint32_t width = get_u32(bytes, 4);
  uint32_t height = get_u32(bytes, 8);
  if (width == 0 || height == 0) throw MalformedFile("zero grid dimension");
  uint64_t count = static_cast<uint64_t>(width) * height;
  uint64_t payload = bytes.size() - 16;
  if (payload % 8 != 0 || payload / 8 != count)
    throw MalformedFile("grid size mismatch");

  Grid g(height, width);
  for (uint64_t i = 0; i < count; ++i) {
    uint64_t u = 0;
    for (int b = 7; b >= 0; --b) u = (u << 8) | bytes[16 + i * 8 + static_cast<uint64_t>(b)];
    g.data[i] = std::bit_cast<double>(u);
  }
  return g;
}

std::vector<uint8_t> encode_grid(const Grid& g) {
  if (g.data.size() != g.rows * g.cols)
    throw DimensionMismatch("grid data does not match dimensions");
  if (g.rows == 0 || g.cols == 0) throw EmptyInput("empty grid");
  std::vector<uint8_t> out;
  out.reserve(16 + g.data.size() * 8);
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, static_cast<uint32_t>(g.cols));
  put_u32(out, static_cast<uint32_t>(g.rows));
  put_u32(out, 0);  // reserved, pads the header to 16 bytes
  for (double v : g.data) {
    uint64_t u = std::bit_cast<uint64_t>(v);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<uint8_t>((u >> (8 * b)) & 0xff));
  }
  return out;
}

Grid read_grid(const std::filesystem::path& path) {
  return decode_grid(read_file(path));
}

void write_grid(const Grid& g, const std::filesystem::path& path) {
  write_file(path, encode_grid(g));
}

}  // namespace wmark
