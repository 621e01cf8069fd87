/*
 * Copyright 2026 The Isobenefit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <span>
#include <utility>

#include "isobenefit/scene.hpp"

namespace isobenefit {

/// Benefit values sampled on a grid. values(row, col) with row 0 at the bottom,
/// so the contiguous storage is row-major from the bottom row upward.
template <typename Scalar>
class BasicRaster {
 public:
  using Values = RowMajorArray<Scalar>;

  BasicRaster() = default;

  explicit BasicRaster(const BasicGridSpec<Scalar>& grid)
      : grid_(grid), values_(Values::Zero(grid.nrows, grid.ncols)) {
    check_grid(grid_);
  }

  template <typename Derived>
  BasicRaster(const BasicGridSpec<Scalar>& grid, const Eigen::DenseBase<Derived>& values)
      : grid_(grid), values_(values) {
    check_grid(grid_);
    if (values_.rows() != grid_.nrows || values_.cols() != grid_.ncols) {
      throw Error(ErrorCode::ShapeMismatch, "raster values do not match grid shape");
    }
  }

  const BasicGridSpec<Scalar>& grid() const { return grid_; }
  const Values& values() const { return values_; }
  Values& values() { return values_; }

  Scalar operator()(Eigen::Index col, Eigen::Index row) const { return values_(row, col); }
  Scalar& operator()(Eigen::Index col, Eigen::Index row) { return values_(row, col); }

  std::span<const Scalar> flat() const {
    return {values_.data(), static_cast<std::size_t>(values_.size())};
  }

  bool all_finite() const { return values_.allFinite(); }

 private:
  BasicGridSpec<Scalar> grid_;
  Values values_;
};

/// Builds a raster from an expression over another raster's values on the
/// same grid, e.g. `with_values(a, a.values() - b.values())`.
template <typename Scalar, typename Derived>
BasicRaster<Scalar> with_values(const BasicRaster<Scalar>& like,
                                const Eigen::DenseBase<Derived>& values) {
  return BasicRaster<Scalar>(like.grid(), values);
}

using Raster = BasicRaster<double>;

}  // namespace isobenefit
