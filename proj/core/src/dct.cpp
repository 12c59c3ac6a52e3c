#include "wmark/dct.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "wmark/error.hpp"

namespace wmark {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Iterative radix-2 Cooley-Tukey; n must be a power of two. Twiddles come
// from a per-call table computed with cos/sin directly, keeping rounding
// error well below the 1e-9 contract even at n = 2^17.
void fft_pow2(std::vector<cd>& a, bool inverse) {
  const size_t n = a.size();
  if (n <= 1) return;

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<cd> tw(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (size_t k = 0; k < n / 2; ++k) {
    double ang = sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    tw[k] = cd(std::cos(ang), std::sin(ang));
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t step = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        cd u = a[i + k];
        cd v = a[i + k + len / 2] * tw[k * step];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Unnormalized DFT of arbitrary length: forward sum a[n] e^{-2pi i kn/N}.
// Power-of-two sizes go straight to the radix-2 kernel, everything else
// through Bluestein's chirp-z reduction to a pow2 convolution.
void dft(std::vector<cd>& a, bool inverse);

void bluestein(std::vector<cd>& a) {
  const size_t n = a.size();
  const size_t m = next_pow2(2 * n - 1);

  // chirp[k] = exp(-i pi k^2 / n); k^2 taken mod 2n to keep the cos/sin
  // argument small and precise.
  std::vector<cd> chirp(n);
  for (size_t k = 0; k < n; ++k) {
    uint64_t sq = (static_cast<uint64_t>(k) * k) % (2 * n);
    double ang = -kPi * static_cast<double>(sq) / static_cast<double>(n);
    chirp[k] = cd(std::cos(ang), std::sin(ang));
  }

  std::vector<cd> u(m), v(m);
  for (size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
  v[0] = std::conj(chirp[0]);
  for (size_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(chirp[k]);

  fft_pow2(u, false);
  fft_pow2(v, false);
  for (size_t k = 0; k < m; ++k) u[k] *= v[k];
  fft_pow2(u, true);

  const double inv_m = 1.0 / static_cast<double>(m);
  for (size_t k = 0; k < n; ++k) a[k] = u[k] * inv_m * chirp[k];
}

void dft(std::vector<cd>& a, bool inverse) {
  const size_t n = a.size();
  if (n <= 1) return;
  if (inverse) {
    for (auto& x : a) x = std::conj(x);
    dft(a, false);
    for (auto& x : a) x = std::conj(x);
    return;
  }
  if ((n & (n - 1)) == 0) {
    fft_pow2(a, false);
  } else {
    bluestein(a);
  }
}

}  // namespace

Spectrum1D dct1d(std::span<const double> signal) {
  const size_t n = signal.size();
  if (n == 0) throw EmptyInput("dct1d: empty signal");
  if (n == 1) return {signal[0]};

  // Makhoul's single-FFT form: even samples forward, odd samples reversed.
  std::vector<cd> v(n);
  for (size_t i = 0; 2 * i < n; ++i) v[i] = signal[2 * i];
  for (size_t i = 0; 2 * i + 1 < n; ++i) v[n - 1 - i] = signal[2 * i + 1];
  dft(v, false);

  const double scale_dc = 1.0 / std::sqrt(static_cast<double>(n));
  const double scale_ac = std::sqrt(2.0 / static_cast<double>(n));
  Spectrum1D out(n);
  for (size_t k = 0; k < n; ++k) {
    double ang = -kPi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    double re = std::cos(ang) * v[k].real() - std::sin(ang) * v[k].imag();
    out[k] = re * (k == 0 ? scale_dc : scale_ac);
  }
  return out;
}

std::vector<double> idct1d(std::span<const double> spectrum) {
  const size_t n = spectrum.size();
  if (n == 0) throw EmptyInput("idct1d: empty spectrum");
  if (n == 1) return {spectrum[0]};

  // Undo the orthonormal scaling, then invert the Makhoul mapping:
  // V[k] = exp(i pi k / 2n) * (C[k] - i C[n-k]), C[n] = 0.
  const double unscale_dc = std::sqrt(static_cast<double>(n));
  const double unscale_ac = std::sqrt(static_cast<double>(n) / 2.0);
  std::vector<double> c(n);
  c[0] = spectrum[0] * unscale_dc;
  for (size_t k = 1; k < n; ++k) c[k] = spectrum[k] * unscale_ac;

  std::vector<cd> v(n);
  v[0] = cd(c[0], 0.0);
  for (size_t k = 1; k < n; ++k) {
    double ang = kPi * static_cast<double>(k) / (2.0 * static_cast<double>(n));
    v[k] = cd(std::cos(ang), std::sin(ang)) * cd(c[k], -c[n - k]);
  }
  dft(v, true);

  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> out(n);
  for (size_t i = 0; 2 * i < n; ++i) out[2 * i] = v[i].real() * inv_n;
  for (size_t i = 0; 2 * i + 1 < n; ++i) out[2 * i + 1] = v[n - 1 - i].real() * inv_n;
  return out;
}

Grid dct2d(const Grid& g) {
  if (g.rows == 0 || g.cols == 0 || g.data.empty()) throw EmptyInput("dct2d: empty grid");
  if (g.data.size() != g.rows * g.cols)
    throw DimensionMismatch("dct2d: data does not match dimensions");

  Grid out(g.rows, g.cols);
  for (size_t r = 0; r < g.rows; ++r) {
    auto row = dct1d(std::span<const double>(g.data).subspan(r * g.cols, g.cols));
    std::copy(row.begin(), row.end(), out.data.begin() + static_cast<ptrdiff_t>(r * g.cols));
  }
  std::vector<double> col(g.rows);
  for (size_t c = 0; c < g.cols; ++c) {
    for (size_t r = 0; r < g.rows; ++r) col[r] = out.at(r, c);
    auto t = dct1d(col);
    for (size_t r = 0; r < g.rows; ++r) out.at(r, c) = t[r];
  }
  return out;
}

Grid idct2d(const Grid& spectrum) {
  if (spectrum.rows == 0 || spectrum.cols == 0 || spectrum.data.empty())
    throw EmptyInput("idct2d: empty spectrum");
  if (spectrum.data.size() != spectrum.rows * spectrum.cols)
    throw DimensionMismatch("idct2d: data does not match dimensions");

  Grid out = spectrum;
  std::vector<double> col(spectrum.rows);
  for (size_t c = 0; c < spectrum.cols; ++c) {
    for (size_t r = 0; r < spectrum.rows; ++r) col[r] = out.at(r, c);
    auto t = idct1d(col);
    for (size_t r = 0; r < spectrum.rows; ++r) out.at(r, c) = t[r];
  }
  for (size_t r = 0; r < spectrum.rows; ++r) {
    auto row = idct1d(std::span<const double>(out.data).subspan(r * out.cols, out.cols));
    std::copy(row.begin(), row.end(), out.data.begin() + static_cast<ptrdiff_t>(r * out.cols));
  }
  return out;
}

}  // namespace wmark
