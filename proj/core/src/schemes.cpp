#include "wmark/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wmark/dct.hpp"
#include "wmark/error.hpp"
#include "wmark/zigzag.hpp"

namespace wmark {

namespace {

void require_nonempty(const AudioClip& clip, const char* what) {
  if (clip.samples.empty()) throw EmptyInput(std::string(what) + " is empty");
}

void require_capacity(size_t wm_len, size_t capacity, const char* unit) {
  if (wm_len > capacity)
    throw WatermarkTooLong("watermark length " + std::to_string(wm_len) +
                           " exceeds capacity " + std::to_string(capacity) + " " + unit);
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InvalidArgument("alpha must be a positive finite float");
}

// Marked-stream index of watermark sample j under stride k:
// it sits right after cover sample (j+1)k - 1, i.e. at (j+1)(k+1) - 1.
size_t interleave_position(size_t j, size_t stride) {
  return (j + 1) * (stride + 1) - 1;
}

}  // namespace

EmbedResult embed_interleave(const AudioClip& cover, const AudioClip& wm) {
  require_nonempty(cover, "cover");
  require_nonempty(wm, "watermark");
  const size_t nc = cover.samples.size();
  const size_t nw = wm.samples.size();
  require_capacity(nw, nc, "samples");
  const size_t k = nc / nw;

  EmbedResult res;
  res.marked.sample_rate = cover.sample_rate;
  res.marked.samples.reserve(nc + nw);
  size_t j = 0;
  for (size_t i = 0; i < nc; ++i) {
    res.marked.samples.push_back(cover.samples[i]);
    if ((i + 1) % k == 0 && j < nw) res.marked.samples.push_back(wm.samples[j++]);
  }

  res.key.scheme = Scheme::interleave;
  res.key.cover_len = nc;
  res.key.wm_len = nw;
  res.key.stride = k;
  res.key.alpha = 1.0;
  res.key.sample_rate = wm.sample_rate;
  return res;
}

std::pair<AudioClip, AudioClip> extract_interleave(const AudioClip& marked,
                                                   const EmbedKey& key) {
  if (key.scheme != Scheme::interleave)
    throw KeyMismatch("key scheme is not interleave");
  if (key.wm_len == 0 || key.wm_len > key.cover_len)
    throw KeyMismatch("key lengths are inconsistent");
  if (key.stride != key.cover_len / key.wm_len)
    throw KeyMismatch("key stride does not match lengths");
  if (marked.samples.size() != key.cover_len + key.wm_len)
    throw KeyMismatch("marked length " + std::to_string(marked.samples.size()) +
                      " does not equal cover_len + wm_len");

  AudioClip wm;
  wm.sample_rate = key.sample_rate;
  wm.samples.reserve(key.wm_len);
  AudioClip cover;
  cover.sample_rate = marked.sample_rate;
  cover.samples.reserve(key.cover_len);

  size_t j = 0;
  for (size_t i = 0; i < marked.samples.size(); ++i) {
    if (j < key.wm_len && i == interleave_position(j, key.stride)) {
      wm.samples.push_back(marked.samples[i]);
      ++j;
    } else {
      cover.samples.push_back(marked.samples[i]);
    }
  }
  return {std::move(wm), std::move(cover)};
}

EmbedResult embed_dct_aa(const AudioClip& cover, const AudioClip& wm, double alpha) {
  require_nonempty(cover, "cover");
  require_nonempty(wm, "watermark");
  require_alpha(alpha);
  const size_t nc = cover.samples.size();
  const size_t nw = wm.samples.size();
  require_capacity(nw, nc, "samples");

  Spectrum1D spec = dct1d(cover.samples);
  Spectrum1D wm_spec = dct1d(wm.samples);
  for (size_t t = 0; t < nw; ++t) spec[nc - nw + t] = alpha * wm_spec[t];

  EmbedResult res;
  res.marked.samples = idct1d(spec);
  res.marked.sample_rate = cover.sample_rate;
  res.key.scheme = Scheme::dct_audio_audio;
  res.key.cover_len = nc;
  res.key.wm_len = nw;
  res.key.alpha = alpha;
  res.key.sample_rate = wm.sample_rate;
  return res;
}

AudioClip extract_dct_aa(const AudioClip& marked, const EmbedKey& key) {
  if (key.scheme != Scheme::dct_audio_audio)
    throw KeyMismatch("key scheme is not dct-aa");
  if (key.wm_len == 0 || key.wm_len > key.cover_len)
    throw KeyMismatch("key lengths are inconsistent");
  if (marked.samples.size() != key.cover_len)
    throw KeyMismatch("marked length does not equal cover_len");

  Spectrum1D spec = dct1d(marked.samples);
  Spectrum1D wm_spec(key.wm_len);
  for (size_t t = 0; t < key.wm_len; ++t)
    wm_spec[t] = spec[key.cover_len - key.wm_len + t] / key.alpha;

  AudioClip wm;
  wm.samples = idct1d(wm_spec);
  wm.sample_rate = key.sample_rate;
  return wm;
}

ImageEmbedResult embed_audio_in_image(const GrayImage& cover, const AudioClip& wm,
                                      double alpha) {
  require_nonempty(wm, "watermark");
  require_alpha(alpha);
  if (cover.width == 0 || cover.height == 0 || cover.pixels.empty())
    throw EmptyInput("cover image is empty");
  const size_t capacity = static_cast<size_t>(cover.width) * cover.height;
  const size_t nw = wm.samples.size();
  require_capacity(nw, capacity, "pixels");

  // Image spectrum stays at pixel scale (0..255); only image-in-audio
  // normalizes, mirroring the asymmetric distortion between the two paths.
  std::vector<double> scanned = zigzag_scan(dct2d(image_to_grid(cover)));
  Spectrum1D wm_spec = dct1d(wm.samples);
  for (size_t t = 0; t < nw; ++t) scanned[capacity - nw + t] = alpha * wm_spec[t];

  ImageEmbedResult res;
  res.marked = idct2d(zigzag_unscan(scanned, cover.height, cover.width));
  res.key.scheme = Scheme::audio_in_image;
  res.key.cover_len = capacity;
  res.key.wm_len = nw;
  res.key.alpha = alpha;
  res.key.img_width = cover.width;
  res.key.img_height = cover.height;
  res.key.sample_rate = wm.sample_rate;
  return res;
}

AudioClip extract_audio_in_image(const Grid& marked, const EmbedKey& key) {
  if (key.scheme != Scheme::audio_in_image)
    throw KeyMismatch("key scheme is not audio-in-image");
  const size_t capacity = static_cast<size_t>(key.img_width) * key.img_height;
  if (capacity == 0 || key.cover_len != capacity)
    throw KeyMismatch("key image dimensions are inconsistent");
  if (key.wm_len == 0 || key.wm_len > capacity)
    throw KeyMismatch("key watermark length is inconsistent");
  if (marked.rows != key.img_height || marked.cols != key.img_width)
    throw KeyMismatch("marked grid dimensions do not match key");

  std::vector<double> scanned = zigzag_scan(dct2d(marked));
  Spectrum1D wm_spec(key.wm_len);
  for (size_t t = 0; t < key.wm_len; ++t)
    wm_spec[t] = scanned[capacity - key.wm_len + t] / key.alpha;

  AudioClip wm;
  wm.samples = idct1d(wm_spec);
  wm.sample_rate = key.sample_rate;
  return wm;
}

EmbedResult embed_image_in_audio(const AudioClip& cover, const GrayImage& wm,
                                 double alpha) {
  require_nonempty(cover, "cover");
  require_alpha(alpha);
  if (wm.width == 0 || wm.height == 0 || wm.pixels.empty())
    throw EmptyInput("watermark image is empty");
  const size_t nc = cover.samples.size();
  const size_t nw = static_cast<size_t>(wm.width) * wm.height;
  require_capacity(nw, nc, "samples");

  Grid normalized(wm.height, wm.width);
  for (size_t i = 0; i < wm.pixels.size(); ++i) normalized.data[i] = wm.pixels[i] / 255.0;
  std::vector<double> wm_coeffs = zigzag_scan(dct2d(normalized));

  Spectrum1D spec = dct1d(cover.samples);
  for (size_t t = 0; t < nw; ++t) spec[nc - nw + t] = alpha * wm_coeffs[t];

  EmbedResult res;
  res.marked.samples = idct1d(spec);
  res.marked.sample_rate = cover.sample_rate;
  res.key.scheme = Scheme::image_in_audio;
  res.key.cover_len = nc;
  res.key.wm_len = nw;
  res.key.alpha = alpha;
  res.key.img_width = wm.width;
  res.key.img_height = wm.height;
  res.key.sample_rate = cover.sample_rate;
  return res;
}

GrayImage extract_image_in_audio(const AudioClip& marked, const EmbedKey& key) {
  if (key.scheme != Scheme::image_in_audio)
    throw KeyMismatch("key scheme is not image-in-audio");
  const size_t nw = static_cast<size_t>(key.img_width) * key.img_height;
  if (nw == 0 || key.wm_len != nw)
    throw KeyMismatch("key image dimensions are inconsistent");
  if (key.wm_len > key.cover_len) throw KeyMismatch("key lengths are inconsistent");
  if (marked.samples.size() != key.cover_len)
    throw KeyMismatch("marked length does not equal cover_len");

  Spectrum1D spec = dct1d(marked.samples);
  std::vector<double> wm_coeffs(nw);
  for (size_t t = 0; t < nw; ++t)
    wm_coeffs[t] = spec[key.cover_len - nw + t] / key.alpha;

  Grid g = idct2d(zigzag_unscan(wm_coeffs, key.img_height, key.img_width));
  for (double& v : g.data) v *= 255.0;  // undo the [0,1] normalization
  return grid_to_image(g);
}

DistortionReport embedding_distortion(const AudioClip& cover, const AudioClip& marked,
                                      const EmbedKey& key) {
  DistortionReport rep;
  switch (key.scheme) {
    case Scheme::interleave: {
      if (cover.samples.size() != key.cover_len)
        throw KeyMismatch("cover length does not match key");
      auto [wm, recovered_cover] = extract_interleave(marked, key);
      (void)wm;
      rep.fidelity = fidelity(cover.samples, recovered_cover.samples);
      rep.prefix_mse = mse(cover.samples,
                           std::span(marked.samples).first(cover.samples.size()));
      return rep;
    }
    case Scheme::dct_audio_audio:
    case Scheme::image_in_audio: {
      if (cover.samples.size() != key.cover_len)
        throw KeyMismatch("cover length does not match key");
      if (marked.samples.size() != key.cover_len)
        throw KeyMismatch("marked length does not match key");
      rep.fidelity = fidelity(cover.samples, marked.samples);
      return rep;
    }
    case Scheme::audio_in_image:
      throw KeyMismatch("audio-in-image distortion needs the image overload");
  }
  throw KeyMismatch("unknown scheme");
}

DistortionReport embedding_distortion(const GrayImage& cover, const Grid& marked,
                                      const EmbedKey& key) {
  if (key.scheme != Scheme::audio_in_image)
    throw KeyMismatch("image distortion overload requires audio-in-image");
  if (cover.width != key.img_width || cover.height != key.img_height)
    throw KeyMismatch("cover image dimensions do not match key");
  if (marked.rows != key.img_height || marked.cols != key.img_width)
    throw KeyMismatch("marked grid dimensions do not match key");
  Grid cover_grid = image_to_grid(cover);
  DistortionReport rep;
  rep.fidelity = fidelity(cover_grid.data, marked.data);
  return rep;
}

}  // namespace wmark
