#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace wmark {

struct FidelityReport {
  double mse = 0.0;
  double snr_db = 0.0;  // +inf when the error energy is zero
  size_t n = 0;         // compared sample count
};

/// (1/N) * sum (x_i - y_i)^2. Throws LengthMismatch, EmptyInput.
double mse(std::span<const double> x, std::span<const double> y);

/// 10*log10(sum ref^2 / sum (ref-test)^2); +inf when the error energy is
/// zero. Throws ZeroReference for an all-zero reference.
double snr_db(std::span<const double> reference, std::span<const double> test);

/// Fraction of differing bit positions.
double ber(std::span<const uint8_t> sent, std::span<const uint8_t> received);

/// mse + snr in one pass; degenerate cases map to +/-inf instead of
/// throwing (identical signals -> +inf, zero reference with error -> -inf).
FidelityReport fidelity(std::span<const double> reference, std::span<const double> test);

}  // namespace wmark
