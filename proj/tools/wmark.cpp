// wmark: embed/extract watermarks in audio and images, protect the
// transmitted PCM with Hamming(15,11), simulate noisy channels, and report
// MSE/SNR/BER fidelity figures.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wmark/audio.hpp"
#include "wmark/bits.hpp"
#include "wmark/channel.hpp"
#include "wmark/error.hpp"
#include "wmark/fileio.hpp"
#include "wmark/grid.hpp"
#include "wmark/hamming.hpp"
#include "wmark/key.hpp"
#include "wmark/metrics.hpp"
#include "wmark/pgm.hpp"
#include "wmark/schemes.hpp"
#include "wmark/wav.hpp"

namespace {

using namespace wmark;

// Report floats carry 9 significant digits; values below 1e-3 switch to
// scientific notation, zero prints as a bare 0.
std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  double mag = std::fabs(v);
  if (mag < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.8e", v);
  } else {
    int exponent = static_cast<int>(std::floor(std::log10(mag)));
    int decimals = exponent >= 8 ? 0 : 8 - exponent;
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  }
  return buf;
}

void print_line(const char* key, const std::string& value) {
  std::cout << key << "=" << value << "\n";
}

void print_fidelity(const FidelityReport& rep) {
  print_line("mse", format_value(rep.mse));
  print_line("snr_db", format_value(rep.snr_db));
  print_line("n", std::to_string(rep.n));
}

enum class FileKind { wav, pgm, grid, bits };

FileKind sniff_kind(std::span<const uint8_t> bytes) {
  if (bytes.size() >= 4 && bytes[0] == 'R' && bytes[1] == 'I' && bytes[2] == 'F' &&
      bytes[3] == 'F')
    return FileKind::wav;
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '2'))
    return FileKind::pgm;
  if (bytes.size() >= 4 && bytes[0] == 'D' && bytes[1] == 'C' && bytes[2] == 'T' &&
      bytes[3] == 'F')
    return FileKind::grid;
  return FileKind::bits;
}

const char* kind_name(FileKind k) {
  switch (k) {
    case FileKind::wav: return "wav";
    case FileKind::pgm: return "pgm";
    case FileKind::grid: return "grid";
    case FileKind::bits: return "bits";
  }
  return "?";
}

struct EmbedArgs {
  std::string scheme;
  std::string cover;
  std::string watermark;
  std::string out;
  std::string key;
  std::string render_pgm;
  double alpha = 1.0;
};

void run_embed(const EmbedArgs& a) {
  Scheme scheme = scheme_from_name(a.scheme);
  switch (scheme) {
    case Scheme::interleave: {
      AudioClip cover = pcm_to_float(read_wav(a.cover));
      AudioClip wm = pcm_to_float(read_wav(a.watermark));
      EmbedResult res = embed_interleave(cover, wm);
      write_wav(float_to_pcm(res.marked), a.out);
      write_key(res.key, a.key);
      auto rep = embedding_distortion(cover, res.marked, res.key);
      print_line("scheme", std::string(scheme_name(scheme)));
      print_fidelity(rep.fidelity);
      break;
    }
    case Scheme::dct_audio_audio: {
      AudioClip cover = pcm_to_float(read_wav(a.cover));
      AudioClip wm = pcm_to_float(read_wav(a.watermark));
      EmbedResult res = embed_dct_aa(cover, wm, a.alpha);
      write_wav(float_to_pcm(res.marked), a.out);
      write_key(res.key, a.key);
      auto rep = embedding_distortion(cover, res.marked, res.key);
      print_line("scheme", std::string(scheme_name(scheme)));
      print_fidelity(rep.fidelity);
      break;
    }
    case Scheme::audio_in_image: {
      GrayImage cover = read_pgm(a.cover);
      AudioClip wm = pcm_to_float(read_wav(a.watermark));
      ImageEmbedResult res = embed_audio_in_image(cover, wm, a.alpha);
      write_grid(res.marked, a.out);
      if (!a.render_pgm.empty()) write_pgm(grid_to_image(res.marked), a.render_pgm);
      write_key(res.key, a.key);
      auto rep = embedding_distortion(cover, res.marked, res.key);
      print_line("scheme", std::string(scheme_name(scheme)));
      print_fidelity(rep.fidelity);
      break;
    }
    case Scheme::image_in_audio: {
      AudioClip cover = pcm_to_float(read_wav(a.cover));
      GrayImage wm = read_pgm(a.watermark);
      EmbedResult res = embed_image_in_audio(cover, wm, a.alpha);
      write_wav(float_to_pcm(res.marked), a.out);
      write_key(res.key, a.key);
      auto rep = embedding_distortion(cover, res.marked, res.key);
      print_line("scheme", std::string(scheme_name(scheme)));
      print_fidelity(rep.fidelity);
      break;
    }
  }
}

struct ExtractArgs {
  std::string in;
  std::string key;
  std::string out;
  std::string cover_out;
  std::string reference;
};

void run_extract(const ExtractArgs& a) {
  EmbedKey key = read_key(a.key);
  print_line("scheme", std::string(scheme_name(key.scheme)));
  switch (key.scheme) {
    case Scheme::interleave: {
      AudioClip marked = pcm_to_float(read_wav(a.in));
      auto [wm, cover] = extract_interleave(marked, key);
      write_wav(float_to_pcm(wm), a.out);
      if (!a.cover_out.empty()) write_wav(float_to_pcm(cover), a.cover_out);
      if (!a.reference.empty()) {
        AudioClip ref = pcm_to_float(read_wav(a.reference));
        print_fidelity(fidelity(ref.samples, wm.samples));
      }
      break;
    }
    case Scheme::dct_audio_audio: {
      AudioClip marked = pcm_to_float(read_wav(a.in));
      AudioClip wm = extract_dct_aa(marked, key);
      write_wav(float_to_pcm(wm), a.out);
      if (!a.reference.empty()) {
        AudioClip ref = pcm_to_float(read_wav(a.reference));
        print_fidelity(fidelity(ref.samples, wm.samples));
      }
      break;
    }
    case Scheme::audio_in_image: {
      // The float grid is the lossless carrier; a PGM rendering is accepted
      // as the lossy alternative.
      auto bytes = read_file(a.in);
      Grid marked;
      if (sniff_kind(bytes) == FileKind::pgm) {
        marked = image_to_grid(decode_pgm(bytes));
      } else {
        marked = decode_grid(bytes);
      }
      AudioClip wm = extract_audio_in_image(marked, key);
      write_wav(float_to_pcm(wm), a.out);
      if (!a.reference.empty()) {
        AudioClip ref = pcm_to_float(read_wav(a.reference));
        print_fidelity(fidelity(ref.samples, wm.samples));
      }
      break;
    }
    case Scheme::image_in_audio: {
      AudioClip marked = pcm_to_float(read_wav(a.in));
      GrayImage wm = extract_image_in_audio(marked, key);
      write_pgm(wm, a.out);
      if (!a.reference.empty()) {
        GrayImage ref = read_pgm(a.reference);
        print_fidelity(fidelity(image_to_grid(ref).data, image_to_grid(wm).data));
      }
      break;
    }
  }
}

void run_protect(const std::string& in, const std::string& out) {
  PcmBuffer buf = read_wav(in);
  BitStream stream = protect(buf);
  write_bit_file(stream, out);
  print_line("n", std::to_string(buf.words.size() * 16));
}

void run_unprotect(const std::string& in, const std::string& out, uint32_t rate) {
  BitStream stream = read_bit_file(in);
  UnprotectStats stats;
  PcmBuffer buf = unprotect(stream, rate, &stats);
  write_wav(buf, out);
  print_line("n", std::to_string(buf.words.size() * 16));
  print_line("corrected_blocks", std::to_string(stats.corrected_blocks));
}

struct ChannelArgs {
  ChannelModel model = ChannelModel::lossless;
  std::optional<double> p;
  std::optional<double> sigma;
  uint64_t seed = 0;
  std::string in;
  std::string out;
};

void run_channel(const ChannelArgs& a) {
  ChannelSpec spec;
  spec.model = a.model;
  spec.seed = a.seed;
  switch (a.model) {
    case ChannelModel::bitflip: {
      spec.p = *a.p;
      BitStream stream = read_bit_file(a.in);
      write_bit_file(apply_bitflip(stream, spec), a.out);
      break;
    }
    case ChannelModel::awgn: {
      spec.sigma = *a.sigma;
      PcmBuffer buf = read_wav(a.in);
      AudioClip noisy = apply_awgn(pcm_to_float(buf), spec);
      write_wav(float_to_pcm(noisy), a.out);
      break;
    }
    case ChannelModel::lossless: {
      write_file(a.out, read_file(a.in));
      break;
    }
  }
}

void run_evaluate(const std::string& path_a, const std::string& path_b) {
  auto bytes_a = read_file(path_a);
  auto bytes_b = read_file(path_b);
  FileKind ka = sniff_kind(bytes_a);
  FileKind kb = sniff_kind(bytes_b);
  if (ka != kb)
    throw UnsupportedFormat(std::string("cannot compare ") + kind_name(ka) + " with " +
                            kind_name(kb));
  switch (ka) {
    case FileKind::wav: {
      AudioClip a = pcm_to_float(decode_wav(bytes_a));
      AudioClip b = pcm_to_float(decode_wav(bytes_b));
      print_fidelity(fidelity(a.samples, b.samples));
      break;
    }
    case FileKind::pgm: {
      Grid a = image_to_grid(decode_pgm(bytes_a));
      Grid b = image_to_grid(decode_pgm(bytes_b));
      print_fidelity(fidelity(a.data, b.data));
      break;
    }
    case FileKind::grid: {
      Grid a = decode_grid(bytes_a);
      Grid b = decode_grid(bytes_b);
      if (a.rows != b.rows || a.cols != b.cols)
        throw LengthMismatch("grid dimensions differ");
      print_fidelity(fidelity(a.data, b.data));
      break;
    }
    case FileKind::bits: {
      BitStream a = decode_bit_file(bytes_a);
      BitStream b = decode_bit_file(bytes_b);
      std::vector<double> da(a.bits.begin(), a.bits.end());
      std::vector<double> db(b.bits.begin(), b.bits.end());
      FidelityReport rep = fidelity(da, db);
      print_line("mse", format_value(rep.mse));
      print_line("snr_db", format_value(rep.snr_db));
      print_line("ber", format_value(ber(a.bits, b.bits)));
      print_line("n", std::to_string(rep.n));
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"audio/image watermarking toolkit"};
  app.require_subcommand(1);

  EmbedArgs embed_args;
  auto* embed = app.add_subcommand("embed", "hide a watermark in a cover carrier");
  embed->add_option("--scheme", embed_args.scheme, "embedding scheme")
      ->required()
      ->check(CLI::IsMember({"interleave", "dct-aa", "audio-in-image", "image-in-audio"}));
  embed->add_option("--cover", embed_args.cover, "cover carrier (WAV or PGM)")->required();
  embed->add_option("--watermark", embed_args.watermark, "watermark payload (WAV or PGM)")
      ->required();
  embed->add_option("--out", embed_args.out, "marked carrier output")->required();
  embed->add_option("--key", embed_args.key, "extraction key sidecar output")->required();
  embed->add_option("--alpha", embed_args.alpha, "embedding strength (DCT schemes)")
      ->check(CLI::PositiveNumber)
      ->default_val(1.0);
  embed->add_option("--render-pgm", embed_args.render_pgm,
                    "also write the 8-bit rounded rendering (audio-in-image)");

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "recover a watermark from a marked carrier");
  extract->add_option("--in", extract_args.in, "marked carrier")->required();
  extract->add_option("--key", extract_args.key, "extraction key sidecar")->required();
  extract->add_option("--out", extract_args.out, "recovered watermark output")->required();
  extract->add_option("--cover-out", extract_args.cover_out,
                      "recovered cover output (interleave only)");
  extract->add_option("--reference", extract_args.reference,
                      "original watermark; prints the recovery MSE");

  std::string protect_in, protect_out;
  auto* protect_cmd = app.add_subcommand("protect", "Hamming(15,11)-encode a WAV's PCM bits");
  protect_cmd->add_option("--in", protect_in, "input WAV")->required();
  protect_cmd->add_option("--out", protect_out, "protected bitstream output")->required();

  std::string unprotect_in, unprotect_out;
  uint32_t unprotect_rate = 44100;
  auto* unprotect_cmd =
      app.add_subcommand("unprotect", "decode a protected bitstream back to a WAV");
  unprotect_cmd->add_option("--in", unprotect_in, "protected bitstream")->required();
  unprotect_cmd->add_option("--out", unprotect_out, "output WAV")->required();
  unprotect_cmd
      ->add_option("--rate", unprotect_rate,
                   "sample rate of the output WAV (the stream does not carry one)")
      ->check(CLI::PositiveNumber)
      ->default_val(44100);

  ChannelArgs channel_args;
  double channel_p = 0.0, channel_sigma = 0.0;
  bool p_set = false, sigma_set = false;
  auto* channel_cmd = app.add_subcommand("channel", "apply a seeded corruption model");
  std::map<std::string, ChannelModel> model_map{{"bitflip", ChannelModel::bitflip},
                                                {"awgn", ChannelModel::awgn},
                                                {"lossless", ChannelModel::lossless}};
  channel_cmd->add_option("--model", channel_args.model, "channel model")
      ->required()
      ->transform(CLI::CheckedTransformer(model_map, CLI::ignore_case));
  channel_cmd->add_option("--seed", channel_args.seed, "generator seed (mandatory)")
      ->required();
  auto* p_opt = channel_cmd->add_option("--p", channel_p, "bitflip probability per bit")
                    ->check(CLI::Range(0.0, 1.0));
  auto* sigma_opt =
      channel_cmd->add_option("--sigma", channel_sigma, "AWGN standard deviation")
          ->check(CLI::NonNegativeNumber);
  channel_cmd->add_option("--in", channel_args.in, "input file")->required();
  channel_cmd->add_option("--out", channel_args.out, "output file")->required();

  std::string eval_a, eval_b;
  auto* evaluate = app.add_subcommand("evaluate", "print fidelity metrics for two files");
  evaluate->add_option("--a", eval_a, "reference file")->required();
  evaluate->add_option("--b", eval_b, "test file")->required();

  try {
    app.parse(argc, argv);

    if (*channel_cmd) {
      p_set = p_opt->count() > 0;
      sigma_set = sigma_opt->count() > 0;
      if (channel_args.model == ChannelModel::bitflip && !p_set)
        throw CLI::RequiredError("--p (bitflip model)");
      if (channel_args.model == ChannelModel::awgn && !sigma_set)
        throw CLI::RequiredError("--sigma (awgn model)");
      if (p_set) channel_args.p = channel_p;
      if (sigma_set) channel_args.sigma = channel_sigma;
    }

    if (*embed) run_embed(embed_args);
    if (*extract) run_extract(extract_args);
    if (*protect_cmd) run_protect(protect_in, protect_out);
    if (*unprotect_cmd) run_unprotect(unprotect_in, unprotect_out, unprotect_rate);
    if (*channel_cmd) run_channel(channel_args);
    if (*evaluate) run_evaluate(eval_a, eval_b);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const wmark::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
