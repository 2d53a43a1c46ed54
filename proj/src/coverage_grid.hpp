#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matrixrepet/matrix.hpp"

namespace matrixrepet::detail {

// 2D prefix sums over the indicator of a position set.
class CoverageGrid {
 public:
  CoverageGrid(std::size_t rows, std::size_t cols) : cols_(cols), sums_((rows + 1) * (cols + 1), 0) {}

  void rebuild(std::size_t rows, std::span<const Cell> cells) {
    std::fill(sums_.begin(), sums_.end(), 0);
    const std::size_t stride = cols_ + 1;
    for (Cell c : cells) sums_[(c.row + 1) * stride + c.col + 1] += 1;
    for (std::size_t i = 1; i <= rows; ++i)
      for (std::size_t j = 1; j <= cols_; ++j)
        sums_[i * stride + j] += sums_[(i - 1) * stride + j] + sums_[i * stride + j - 1] - sums_[(i - 1) * stride + j - 1];
  }

  bool any(Cell o, std::size_t side) const {
    const std::size_t stride = cols_ + 1;
    const std::size_t r1 = o.row + side, c1 = o.col + side;
    const std::int64_t v = sums_[r1 * stride + c1] - sums_[o.row * stride + c1] - sums_[r1 * stride + o.col] +
                           sums_[o.row * stride + o.col];
    return v > 0;
  }

 private:
  std::size_t cols_;
  std::vector<std::int64_t> sums_;
};

}  // namespace matrixrepet::detail
