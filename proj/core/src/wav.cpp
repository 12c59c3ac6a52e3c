#include "wmark/wav.hpp"

#include <cstring>
#include <optional>
#include <string>

#include "wmark/error.hpp"
#include "wmark/fileio.hpp"

namespace wmark {

namespace {

// Bounds-checked cursor over an in-memory buffer; never reads past the end
// or past a declared chunk size.
struct Cursor {
  std::span<const uint8_t> buf;
  size_t pos = 0;

  size_t remaining() const { return buf.size() - pos; }

  void need(size_t n) const {
    if (remaining() < n) throw MalformedFile("truncated file");
  }

  uint16_t u16() {
    need(2);
    uint16_t v = static_cast<uint16_t>(buf[pos] | (buf[pos + 1] << 8));
    pos += 2;
    return v;
  }

  uint32_t u32() {
    need(4);
    uint32_t v = static_cast<uint32_t>(buf[pos]) |
                 (static_cast<uint32_t>(buf[pos + 1]) << 8) |
                 (static_cast<uint32_t>(buf[pos + 2]) << 16) |
                 (static_cast<uint32_t>(buf[pos + 3]) << 24);
    pos += 4;
    return v;
  }

  std::string tag() {
    need(4);
    std::string t(reinterpret_cast<const char*>(buf.data() + pos), 4);
    pos += 4;
    return t;
  }

  std::span<const uint8_t> bytes(size_t n) {
    need(n);
    auto s = buf.subspan(pos, n);
    pos += n;
    return s;
  }
};

struct FmtChunk {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

void put_tag(std::vector<uint8_t>& out, const char* t) {
  out.insert(out.end(), t, t + 4);
}

}  // namespace

PcmBuffer decode_wav(std::span<const uint8_t> bytes) {
  Cursor c{bytes};
  if (c.tag() != "RIFF") throw MalformedFile("not a RIFF file");
  c.u32();  // declared RIFF size; chunk iteration is bounded by the buffer
  if (c.tag() != "WAVE") throw MalformedFile("not a WAVE file");

  std::optional<FmtChunk> fmt;
  std::optional<std::span<const uint8_t>> data;

  while (c.remaining() >= 8) {
    std::string id = c.tag();
    uint32_t size = c.u32();
    if (c.remaining() < size) throw MalformedFile("truncated " + id + " chunk");
    if (id == "fmt ") {
      if (fmt) throw MalformedFile("duplicate fmt chunk");
      if (size < 16) throw MalformedFile("fmt chunk too small");
      Cursor f{c.bytes(size)};
      FmtChunk parsed;
      parsed.format = f.u16();
      parsed.channels = f.u16();
      parsed.sample_rate = f.u32();
      f.u32();  // byte rate
      f.u16();  // block align
      parsed.bits_per_sample = f.u16();
      fmt = parsed;
    } else if (id == "data") {
      if (data) throw MalformedFile("multiple data chunks");
      data = c.bytes(size);
    } else {
      c.bytes(size);  // LIST and friends carry metadata; skip
    }
    if ((size % 2) != 0 && c.remaining() >= 1) c.bytes(1);  // RIFF pad byte
  }

  if (!fmt) throw MalformedFile("missing fmt chunk");
  if (!data) throw MalformedFile("missing data chunk");
  if (fmt->format != 1) throw UnsupportedFormat("only PCM format 1 is supported");
  if (fmt->channels != 1)
    throw UnsupportedFormat("only mono is supported, got " +
                            std::to_string(fmt->channels) + " channels");
  if (fmt->bits_per_sample != 16)
    throw UnsupportedFormat("only 16 bits/sample is supported, got " +
                            std::to_string(fmt->bits_per_sample));
  if (fmt->sample_rate == 0) throw MalformedFile("sample rate is zero");
  if (data->size() % 2 != 0) throw MalformedFile("odd data chunk size");

  PcmBuffer buf;
  buf.sample_rate = fmt->sample_rate;
  buf.words.reserve(data->size() / 2);
  for (size_t i = 0; i < data->size(); i += 2) {
    uint16_t u = static_cast<uint16_t>((*data)[i] | ((*data)[i + 1] << 8));
    buf.words.push_back(static_cast<int16_t>(u));
  }
  return buf;
}

std::vector<uint8_t> encode_wav(const PcmBuffer& buf) {
  const uint32_t data_size = static_cast<uint32_t>(buf.words.size() * 2);
  std::vector<uint8_t> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 1);                       // PCM
  put_u16(out, 1);                       // mono
  put_u32(out, buf.sample_rate);
  put_u32(out, buf.sample_rate * 2);     // byte rate
  put_u16(out, 2);                       // block align
  put_u16(out, 16);                      // bits per sample
  put_tag(out, "data");
  put_u32(out, data_size);
  for (int16_t w : buf.words) put_u16(out, static_cast<uint16_t>(w));
  return out;
}

PcmBuffer read_wav(const std::filesystem::path& path) {
  return decode_wav(read_file(path));
}

void write_wav(const PcmBuffer& buf, const std::filesystem::path& path) {
  write_file(path, encode_wav(buf));
}

}  // namespace wmark
