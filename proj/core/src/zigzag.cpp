#include "wmark/zigzag.hpp"

#include "wmark/error.hpp"

namespace wmark {

ZigzagPath zigzag_order(size_t n_rows, size_t n_cols) {
  if (n_rows == 0 || n_cols == 0) throw EmptyInput("zigzag_order: empty grid");
  ZigzagPath order;
  order.reserve(n_rows * n_cols);
  const size_t d_max = n_rows + n_cols - 2;
  for (size_t d = 0; d <= d_max; ++d) {
    size_t r_lo = d >= n_cols ? d - n_cols + 1 : 0;
    size_t r_hi = d < n_rows ? d : n_rows - 1;
    if (d % 2 == 1) {
      for (size_t r = r_lo; r <= r_hi; ++r)
        order.emplace_back(static_cast<uint32_t>(r), static_cast<uint32_t>(d - r));
    } else {
      for (size_t r = r_hi + 1; r-- > r_lo;)
        order.emplace_back(static_cast<uint32_t>(r), static_cast<uint32_t>(d - r));
    }
  }
  return order;
}

std::vector<double> zigzag_scan(const Grid& spectrum) {
  if (spectrum.data.size() != spectrum.rows * spectrum.cols)
    throw DimensionMismatch("zigzag_scan: data does not match dimensions");
  auto order = zigzag_order(spectrum.rows, spectrum.cols);
  std::vector<double> out;
  out.reserve(order.size());
  for (auto [r, c] : order) out.push_back(spectrum.at(r, c));
  return out;
}

Grid zigzag_unscan(std::span<const double> seq, size_t n_rows, size_t n_cols) {
  if (seq.size() != n_rows * n_cols)
    throw DimensionMismatch("zigzag_unscan: sequence length does not match dimensions");
  auto order = zigzag_order(n_rows, n_cols);
  Grid g(n_rows, n_cols);
  for (size_t k = 0; k < order.size(); ++k) g.at(order[k].first, order[k].second) = seq[k];
  return g;
}

}  // namespace wmark
