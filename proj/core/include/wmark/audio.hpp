#pragma once

#include <cstdint>
#include <vector>

namespace wmark {

/// Mono sampled signal. Samples loaded from PCM live in [-1.0, 1.0];
/// writers clamp before quantizing, so in-memory intermediates may exceed
/// the range without harm.
struct AudioClip {
  std::vector<double> samples;
  uint32_t sample_rate = 44100;  // Hz
};

/// Transport representation: signed 16-bit PCM words.
struct PcmBuffer {
  std::vector<int16_t> words;
  uint32_t sample_rate = 44100;  // Hz
};

/// 8-bit grayscale raster, row-major, pixels.size() == width * height.
struct GrayImage {
  uint32_t width = 0;   // px
  uint32_t height = 0;  // px
  std::vector<uint8_t> pixels;

  bool operator==(const GrayImage&) const = default;
};

/// sample = word / 32768.0, so -32768 maps exactly to -1.0.
AudioClip pcm_to_float(const PcmBuffer& buf);

/// word = clamp(round(sample * 32768), -32768, 32767).
PcmBuffer float_to_pcm(const AudioClip& clip);

}  // namespace wmark
