#pragma once

#include <cstdint>

#include "wmark/audio.hpp"
#include "wmark/bits.hpp"

namespace wmark {

enum class ChannelModel { bitflip, awgn, lossless };

/// Seeded corruption model. The generator is pinned (mt19937_64 with a
/// 53-bit uniform mapping and Box-Muller normals) so identical (input,
/// spec) pairs give identical outputs; there is no entropy default.
struct ChannelSpec {
  ChannelModel model = ChannelModel::lossless;
  double p = 0.0;      // bitflip probability per bit, in [0, 1]
  double sigma = 0.0;  // AWGN standard deviation, float-sample units
  uint64_t seed = 0;
};

/// Flips each bit independently with probability spec.p.
BitStream apply_bitflip(const BitStream& stream, const ChannelSpec& spec);

/// Adds gaussian(0, sigma) per sample, then clamps to [-1, 1].
AudioClip apply_awgn(const AudioClip& clip, const ChannelSpec& spec);

}  // namespace wmark
