#include "wmark/metrics.hpp"

#include <cmath>
#include <limits>

#include "wmark/error.hpp"

namespace wmark {

namespace {

void check_lengths(size_t nx, size_t ny) {
  if (nx != ny) throw LengthMismatch("sequence lengths differ");
  if (nx == 0) throw EmptyInput("empty sequences");
}

}  // namespace

double mse(std::span<const double> x, std::span<const double> y) {
  check_lengths(x.size(), y.size());
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - y[i];
    acc += d * d;
  }
  return acc / static_cast<double>(x.size());
}

double snr_db(std::span<const double> reference, std::span<const double> test) {
  check_lengths(reference.size(), test.size());
  double ref_energy = 0.0;
  double err_energy = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    ref_energy += reference[i] * reference[i];
    double d = reference[i] - test[i];
    err_energy += d * d;
  }
  if (ref_energy == 0.0) throw ZeroReference("reference signal is all-zero");
  if (err_energy == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(ref_energy / err_energy);
}

double ber(std::span<const uint8_t> sent, std::span<const uint8_t> received) {
  check_lengths(sent.size(), received.size());
  size_t diff = 0;
  for (size_t i = 0; i < sent.size(); ++i)
    if ((sent[i] & 1) != (received[i] & 1)) ++diff;
  return static_cast<double>(diff) / static_cast<double>(sent.size());
}

FidelityReport fidelity(std::span<const double> reference, std::span<const double> test) {
  check_lengths(reference.size(), test.size());
  double ref_energy = 0.0;
  double err_energy = 0.0;
  for (size_t i = 0; i < reference.size(); ++i) {
    ref_energy += reference[i] * reference[i];
    double d = reference[i] - test[i];
    err_energy += d * d;
  }
  FidelityReport rep;
  rep.n = reference.size();
  rep.mse = err_energy / static_cast<double>(reference.size());
  if (err_energy == 0.0) {
    rep.snr_db = std::numeric_limits<double>::infinity();
  } else if (ref_energy == 0.0) {
    rep.snr_db = -std::numeric_limits<double>::infinity();
  } else {
    rep.snr_db = 10.0 * std::log10(ref_energy / err_energy);
  }
  return rep;
}

}  // namespace wmark
