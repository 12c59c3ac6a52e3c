#include "wmark/audio.hpp"

#include <algorithm>
#include <cmath>

namespace wmark {

AudioClip pcm_to_float(const PcmBuffer& buf) {
  AudioClip clip;
  clip.sample_rate = buf.sample_rate;
  clip.samples.reserve(buf.words.size());
  for (int16_t w : buf.words) clip.samples.push_back(w / 32768.0);
  return clip;
}

PcmBuffer float_to_pcm(const AudioClip& clip) {
  PcmBuffer buf;
  buf.sample_rate = clip.sample_rate;
  buf.words.reserve(clip.samples.size());
  for (double s : clip.samples) {
    long long w = std::llround(s * 32768.0);
    w = std::clamp(w, -32768LL, 32767LL);
    buf.words.push_back(static_cast<int16_t>(w));
  }
  return buf;
}

}  // namespace wmark
