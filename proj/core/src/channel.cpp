#include "wmark/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "wmark/error.hpp"

namespace wmark {

namespace {

// Deterministic generator shared by both models. mt19937_64 is pinned by
// the standard; the uniform and gaussian mappings are spelled out here
// because std::*_distribution is implementation-defined.
class DetRng {
public:
  explicit DetRng(uint64_t seed) : eng_(seed) {}

  // 53-bit mantissa uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Box-Muller, cosine branch; u1 shifted into (0, 1] so log stays finite
  double gaussian() {
    double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace

BitStream apply_bitflip(const BitStream& stream, const ChannelSpec& spec) {
  if (spec.model != ChannelModel::bitflip)
    throw InvalidArgument("apply_bitflip requires the bitflip model");
  if (spec.p < 0.0 || spec.p > 1.0)
    throw InvalidArgument("bitflip probability must be in [0, 1]");
  DetRng rng(spec.seed);
  BitStream out = stream;
  for (auto& bit : out.bits)
    if (rng.uniform() < spec.p) bit ^= 1;
  return out;
}

AudioClip apply_awgn(const AudioClip& clip, const ChannelSpec& spec) {
  if (spec.model != ChannelModel::awgn)
    throw InvalidArgument("apply_awgn requires the awgn model");
  if (spec.sigma < 0.0) throw InvalidArgument("sigma must be >= 0");
  DetRng rng(spec.seed);
  AudioClip out = clip;
  for (auto& s : out.samples) {
    s += spec.sigma * rng.gaussian();
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
  }
  return out;
}

}  // namespace wmark
