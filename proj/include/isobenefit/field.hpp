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

#include <algorithm>
#include <cmath>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

#include "isobenefit/raster.hpp"
#include "isobenefit/scene.hpp"

namespace isobenefit {

/// Benefit of a single attraction of attractiveness A at distance d.
template <typename Scalar>
Scalar kernel_benefit(Scalar attractiveness, Scalar distance, const BasicKernel<Scalar>& kernel) {
  using std::exp;
  if (!(distance >= Scalar(0))) {
    throw Error(ErrorCode::NegativeDistance, "distance must be >= 0");
  }
  const Scalar e = kernel.efficiency;
  switch (kernel.family) {
    case KernelFamily::Rational:
      return attractiveness / (Scalar(1) + distance / e);
    case KernelFamily::Gaussian:
      return attractiveness * exp(-e * distance * distance);
    case KernelFamily::Exponential:
      return attractiveness * exp(-e * distance);
  }
  return Scalar(0);
}

template <typename Scalar>
struct BasicPointBenefit {
  Scalar total = Scalar(0);
  Scalar positive_part = Scalar(0);  // contributions of A > 0
  Scalar negative_part = Scalar(0);  // contributions of A < 0
};

struct FieldOptions {
  // Contributions with |B_ik| below this are skipped. Zero (the default)
  // keeps every amenity, so the field is the exact sum over all of them.
  double cutoff = 0.0;
  // Row-block workers for grid evaluation. Results are bit-identical for any
  // value since each cell is summed in amenity order by exactly one worker.
  unsigned threads = 1;
};

/// Sums every amenity's contribution at `at`, in amenity order.
template <typename Scalar>
BasicPointBenefit<Scalar> point_benefit(std::type_identity_t<std::span<const BasicAmenity<Scalar>>> amenities,
                                        const BasicKernel<Scalar>& kernel,
                                        const Point2<Scalar>& at, Scalar cutoff = Scalar(0)) {
  using std::abs;
  BasicPointBenefit<Scalar> b;
  for (const auto& a : amenities) {
    const Scalar term = kernel_benefit(a.attractiveness, (a.position - at).norm(), kernel);
    if (cutoff > Scalar(0) && abs(term) < cutoff) continue;
    b.total += term;
    if (a.attractiveness > Scalar(0)) {
      b.positive_part += term;
    } else if (a.attractiveness < Scalar(0)) {
      b.negative_part += term;
    }
  }
  return b;
}

template <typename Scalar>
struct BasicFieldResult {
  BasicRaster<Scalar> total;
  BasicRaster<Scalar> positive;
  BasicRaster<Scalar> negative;
};

/// Evaluates point_benefit at every cell centre of `grid`.
template <typename Scalar>
BasicFieldResult<Scalar> evaluate_field(std::type_identity_t<std::span<const BasicAmenity<Scalar>>> amenities,
                                        const BasicKernel<Scalar>& kernel,
                                        const BasicGridSpec<Scalar>& grid,
                                        const FieldOptions& options = {}) {
  check_kernel(kernel);
  check_grid(grid);
  BasicFieldResult<Scalar> out{BasicRaster<Scalar>(grid), BasicRaster<Scalar>(grid),
                               BasicRaster<Scalar>(grid)};
  const auto cutoff = static_cast<Scalar>(options.cutoff);

  auto rows = [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index j = begin; j < end; ++j) {
      for (Eigen::Index i = 0; i < grid.ncols; ++i) {
        const auto b = point_benefit(amenities, kernel, grid.cell_center(i, j), cutoff);
        out.total(i, j) = b.total;
        out.positive(i, j) = b.positive_part;
        out.negative(i, j) = b.negative_part;
      }
    }
  };

  const auto workers = static_cast<Eigen::Index>(
      std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(grid.nrows)));
  if (workers == 1) {
    rows(0, grid.nrows);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const Eigen::Index chunk = (grid.nrows + workers - 1) / workers;
  for (Eigen::Index begin = 0; begin < grid.nrows; begin += chunk) {
    pool.emplace_back(rows, begin, std::min(begin + chunk, grid.nrows));
  }
  pool.clear();  // joins
  return out;
}

using PointBenefit = BasicPointBenefit<double>;
using FieldResult = BasicFieldResult<double>;

/// Scene-level evaluation under an optional profile. The kernel's family is
/// used as given; its E is replaced by the profile's personal E if set.
FieldResult evaluate_field(const Scene& scene, std::optional<std::string_view> profile,
                           const Kernel& kernel, const GridSpec& grid,
                           const FieldOptions& options = {});

}  // namespace isobenefit
