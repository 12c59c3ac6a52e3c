#include "wmark/pgm.hpp"

#include <string>

#include "wmark/error.hpp"
#include "wmark/fileio.hpp"

namespace wmark {

namespace {

bool is_pnm_space(uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Skips whitespace and '#' comments (comment runs to end of line).
void skip_separators(std::span<const uint8_t> b, size_t& pos) {
  while (pos < b.size()) {
    if (is_pnm_space(b[pos])) {
      ++pos;
    } else if (b[pos] == '#') {
      while (pos < b.size() && b[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

uint64_t parse_uint(std::span<const uint8_t> b, size_t& pos, const char* what) {
  skip_separators(b, pos);
  if (pos >= b.size() || b[pos] < '0' || b[pos] > '9')
    throw MalformedFile(std::string("expected ") + what + " in PGM header");
  uint64_t v = 0;
  while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
    v = v * 10 + (b[pos] - '0');
    if (v > 0xFFFFFFFFull) throw MalformedFile(std::string(what) + " out of range");
    ++pos;
  }
  return v;
}

}  // namespace

GrayImage decode_pgm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw MalformedFile("not a PNM file");
  if (bytes[1] == '2') throw UnsupportedFormat("ASCII PGM (P2) is not supported");
  if (bytes[1] != '5') throw UnsupportedFormat("only binary PGM (P5) is supported");

  size_t pos = 2;
  uint64_t width = parse_uint(bytes, pos, "width");
  uint64_t height = parse_uint(bytes, pos, "height");
  uint64_t maxval = parse_uint(bytes, pos, "maxval");
  if (width == 0 || height == 0) throw MalformedFile("zero image dimension");
  if (maxval != 255) throw UnsupportedFormat("only maxval 255 is supported");

  // Exactly one whitespace byte separates the header from the raster.
  if (pos >= bytes.size() || !is_pnm_space(bytes[pos]))
    throw MalformedFile("missing separator before pixel data");
  ++pos;

  uint64_t count = width * height;
  if (bytes.size() - pos < count) throw MalformedFile("truncated pixel data");

  GrayImage img;
  img.width = static_cast<uint32_t>(width);
  img.height = static_cast<uint32_t>(height);
  img.pixels.assign(bytes.begin() + static_cast<ptrdiff_t>(pos),
                    bytes.begin() + static_cast<ptrdiff_t>(pos + count));
  return img;
}

std::vector<uint8_t> encode_pgm(const GrayImage& img) {
  if (img.pixels.size() != static_cast<size_t>(img.width) * img.height)
    throw DimensionMismatch("pixel count does not match dimensions");
  std::string header = "P5\n" + std::to_string(img.width) + " " +
                       std::to_string(img.height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage read_pgm(const std::filesystem::path& path) {
  return decode_pgm(read_file(path));
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  write_file(path, encode_pgm(img));
}

}  // namespace wmark
