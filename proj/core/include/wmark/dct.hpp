#pragma once

#include <span>
#include <vector>

#include "wmark/grid.hpp"

namespace wmark {

/// DCT coefficients, index 0 = DC, increasing index = increasing frequency.
using Spectrum1D = std::vector<double>;

/// Orthonormal DCT-II:
///   F(u) = sqrt(2/N) * A(u) * sum_i cos(u(2i+1)pi/2N) * f(i),
///   A(0) = 1/sqrt(2), A(u>0) = 1.
/// Computed in O(N log N) via an FFT; matches the direct cosine sum to
/// better than 1e-9 for any N the toolkit handles.
Spectrum1D dct1d(std::span<const double> signal);

/// Exact inverse of dct1d (orthonormal DCT-III).
std::vector<double> idct1d(std::span<const double> spectrum);

/// Separable 2D forms; (0,0) is DC. idct2d inverts dct2d.
Grid dct2d(const Grid& g);
Grid idct2d(const Grid& spectrum);

}  // namespace wmark
