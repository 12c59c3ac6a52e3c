#include "wmark/key.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "wmark/error.hpp"
#include "wmark/fileio.hpp"

namespace wmark {

namespace {

constexpr const char* kFieldNames[] = {"scheme", "cover_len", "wm_len", "stride",
                                       "alpha",  "img_width", "img_height",
                                       "sample_rate"};

std::string format_alpha(double alpha) {
  // shortest round-trip representation, forced to carry a decimal point
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, alpha);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == alpha) break;
  }
  std::string s = buf;
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

uint64_t parse_u64(std::string_view v, const char* field) {
  uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out, 10);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw MalformedFile(std::string("key field ") + field + ": bad integer '" +
                        std::string(v) + "'");
  return out;
}

double parse_alpha(std::string_view v) {
  std::string s(v);
  char* end = nullptr;
  double out = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty())
    throw MalformedFile("key field alpha: bad float '" + s + "'");
  if (!(out > 0.0) || !std::isfinite(out))
    throw MalformedFile("key field alpha must be a positive finite float");
  return out;
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::interleave: return "interleave";
    case Scheme::dct_audio_audio: return "dct-aa";
    case Scheme::audio_in_image: return "audio-in-image";
    case Scheme::image_in_audio: return "image-in-audio";
  }
  throw InvalidArgument("unknown scheme");
}

Scheme scheme_from_name(std::string_view name) {
  if (name == "interleave") return Scheme::interleave;
  if (name == "dct-aa") return Scheme::dct_audio_audio;
  if (name == "audio-in-image") return Scheme::audio_in_image;
  if (name == "image-in-audio") return Scheme::image_in_audio;
  throw InvalidArgument("unknown scheme '" + std::string(name) + "'");
}

std::string serialize_key(const EmbedKey& key) {
  std::string out;
  out += "scheme=" + std::string(scheme_name(key.scheme)) + "\n";
  out += "cover_len=" + std::to_string(key.cover_len) + "\n";
  out += "wm_len=" + std::to_string(key.wm_len) + "\n";
  out += "stride=" + std::to_string(key.stride) + "\n";
  out += "alpha=" + format_alpha(key.alpha) + "\n";
  out += "img_width=" + std::to_string(key.img_width) + "\n";
  out += "img_height=" + std::to_string(key.img_height) + "\n";
  out += "sample_rate=" + std::to_string(key.sample_rate) + "\n";
  return out;
}

EmbedKey parse_key(std::string_view text) {
  std::vector<std::pair<std::string_view, std::string_view>> fields;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw MalformedFile("key line missing '=': '" + std::string(line) + "'");
    fields.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  if (fields.size() != 8) throw MalformedFile("key file must have exactly 8 fields");
  for (size_t i = 0; i < 8; ++i) {
    if (fields[i].first != kFieldNames[i])
      throw MalformedFile("unexpected key field '" + std::string(fields[i].first) +
                          "', wanted '" + kFieldNames[i] + "'");
  }

  EmbedKey key;
  try {
    key.scheme = scheme_from_name(fields[0].second);
  } catch (const InvalidArgument& e) {
    throw MalformedFile(e.what());
  }
  auto parse_u32 = [](std::string_view v, const char* field) {
    uint64_t out = parse_u64(v, field);
    if (out > 0xFFFFFFFFull)
      throw MalformedFile(std::string("key field ") + field + " out of range");
    return static_cast<uint32_t>(out);
  };
  key.cover_len = parse_u64(fields[1].second, "cover_len");
  key.wm_len = parse_u64(fields[2].second, "wm_len");
  key.stride = parse_u64(fields[3].second, "stride");
  key.alpha = parse_alpha(fields[4].second);
  key.img_width = parse_u32(fields[5].second, "img_width");
  key.img_height = parse_u32(fields[6].second, "img_height");
  key.sample_rate = parse_u32(fields[7].second, "sample_rate");

  if (key.cover_len == 0 || key.wm_len == 0)
    throw MalformedFile("key lengths must be positive");
  if (key.sample_rate == 0) throw MalformedFile("key sample_rate must be positive");
  return key;
}

EmbedKey read_key(const std::filesystem::path& path) {
  auto bytes = read_file(path);
  return parse_key(std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                    bytes.size()));
}

void write_key(const EmbedKey& key, const std::filesystem::path& path) {
  std::string text = serialize_key(key);
  write_file(path, std::span(reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

}  // namespace wmark
