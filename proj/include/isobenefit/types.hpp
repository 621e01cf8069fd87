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

#include <Eigen/Dense>

namespace isobenefit {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

// Raster storage: row 0 is the bottom row of the grid, columns run west to east.
template <typename Scalar>
using RowMajorArray =
    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Point2d = Point2<double>;
using RowMajorArrayXXd = RowMajorArray<double>;

}  // namespace isobenefit
