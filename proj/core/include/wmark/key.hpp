#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace wmark {

enum class Scheme { interleave, dct_audio_audio, audio_in_image, image_in_audio };

/// CLI-facing token: interleave, dct-aa, audio-in-image, image-in-audio.
std::string_view scheme_name(Scheme s);
Scheme scheme_from_name(std::string_view name);  // throws InvalidArgument

/// Everything extraction needs; the original cover is never required.
/// Fields that do not apply to a scheme are written as zero (stride,
/// image dimensions) or 1.0 (alpha for interleave).
struct EmbedKey {
  Scheme scheme = Scheme::interleave;
  uint64_t cover_len = 0;   // samples or pixels
  uint64_t wm_len = 0;      // samples or pixels
  uint64_t stride = 0;      // interleave only: floor(cover_len / wm_len)
  double alpha = 1.0;       // DCT schemes: embedding strength
  uint32_t img_width = 0;   // image-bearing schemes
  uint32_t img_height = 0;
  uint32_t sample_rate = 0; // rate of the audio signal extraction rebuilds

  bool operator==(const EmbedKey&) const = default;
};

/// Line-oriented sidecar, one name=value per line, keys in this fixed
/// order: scheme, cover_len, wm_len, stride, alpha, img_width, img_height,
/// sample_rate. Integers in decimal, alpha with a decimal point. Unknown
/// or reordered keys are rejected.
std::string serialize_key(const EmbedKey& key);
EmbedKey parse_key(std::string_view text);

EmbedKey read_key(const std::filesystem::path& path);
void write_key(const EmbedKey& key, const std::filesystem::path& path);

}  // namespace wmark
