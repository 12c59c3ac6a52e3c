#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wmark/grid.hpp"

namespace wmark {

/// Anti-diagonal traversal order, a bijection over all (row, col) pairs.
using ZigzagPath = std::vector<std::pair<uint32_t, uint32_t>>;

/// JPEG-style scan: diagonals d = row + col visited in increasing d; odd
/// diagonals walk with ascending row, even ones with descending row.
/// For 3x3 this is (0,0),(0,1),(1,0),(2,0),(1,1),(0,2),(1,2),(2,1),(2,2).
ZigzagPath zigzag_order(size_t n_rows, size_t n_cols);

/// Element k of the result is spectrum at zigzag_order position k.
std::vector<double> zigzag_scan(const Grid& spectrum);

/// Inverse of zigzag_scan; seq.size() must equal n_rows * n_cols.
Grid zigzag_unscan(std::span<const double> seq, size_t n_rows, size_t n_cols);

}  // namespace wmark
