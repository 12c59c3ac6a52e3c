#pragma once

#include <optional>
#include <utility>

#include "wmark/audio.hpp"
#include "wmark/grid.hpp"
#include "wmark/key.hpp"
#include "wmark/metrics.hpp"

namespace wmark {

struct EmbedResult {
  AudioClip marked;
  EmbedKey key;
};

struct ImageEmbedResult {
  Grid marked;  // float domain; render with grid_to_image for display
  EmbedKey key;
};

/// Inserts watermark sample j immediately after cover sample (j+1)*k - 1,
/// k = floor(cover/wm). Output length = cover + wm; removing the inserted
/// positions reproduces the cover bit-exactly.
EmbedResult embed_interleave(const AudioClip& cover, const AudioClip& wm);

/// Returns (watermark, cover); exact inverse of embed_interleave.
std::pair<AudioClip, AudioClip> extract_interleave(const AudioClip& marked,
                                                   const EmbedKey& key);

/// Replaces the top wm_len cover DCT coefficients with alpha * the
/// watermark spectrum, then inverts the transform.
EmbedResult embed_dct_aa(const AudioClip& cover, const AudioClip& wm, double alpha);
AudioClip extract_dct_aa(const AudioClip& marked, const EmbedKey& key);

/// Replaces the tail of the zigzag-scanned image spectrum with alpha * the
/// watermark audio spectrum. The marked carrier stays in the float domain;
/// rounding to 8 bits is an explicit, separate channel distortion.
ImageEmbedResult embed_audio_in_image(const GrayImage& cover, const AudioClip& wm,
                                      double alpha);
AudioClip extract_audio_in_image(const Grid& marked, const EmbedKey& key);

/// Pixels are normalized to [0,1] before the 2D DCT so the embedded
/// coefficients stay within audio dynamic range.
EmbedResult embed_image_in_audio(const AudioClip& cover, const GrayImage& wm,
                                 double alpha);
GrayImage extract_image_in_audio(const AudioClip& marked, const EmbedKey& key);

struct DistortionReport {
  FidelityReport fidelity;
  // Interleave only: MSE over the leading cover_len samples of the marked
  // signal. Diagnostic; the normative figure is fidelity.mse, computed with
  // the inserted positions removed.
  std::optional<double> prefix_mse;
};

DistortionReport embedding_distortion(const AudioClip& cover, const AudioClip& marked,
                                      const EmbedKey& key);
DistortionReport embedding_distortion(const GrayImage& cover, const Grid& marked,
                                      const EmbedKey& key);

}  // namespace wmark
