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

#include "isobenefit/field.hpp"
#include "isobenefit/raster.hpp"

namespace isobenefit {

template <typename Scalar>
struct BasicSummaryStats {
  Scalar total = Scalar(0);
  Scalar mean = Scalar(0);
  Scalar min = Scalar(0);
  Scalar max = Scalar(0);
  Eigen::Index count = 0;
};

template <typename Scalar>
struct BasicUniformityResult {
  Scalar u = Scalar(0);
  Scalar mean = Scalar(0);
  Scalar stddev = Scalar(0);  // population (divide by m)
  Eigen::Index count = 0;
  // Set when the mean is negative (a disamenity field): U is still computed
  // with the signed mean, but its reading as "uniformity" is not established.
  bool interpret_with_care = false;
};

/// Total, mean, min and max of the benefit over all cells.
template <typename Derived>
auto summary(const Eigen::DenseBase<Derived>& values)
    -> BasicSummaryStats<typename Derived::Scalar> {
  using Scalar = typename Derived::Scalar;
  if (values.size() == 0) throw Error(ErrorCode::EmptyRaster, "summary of an empty raster");
  BasicSummaryStats<Scalar> s;
  s.count = values.size();
  s.total = values.sum();
  s.min = values.minCoeff();
  s.max = values.maxCoeff();
  // Rounding in total/m may step outside [min, max] for near-constant data.
  s.mean = std::clamp(s.total / static_cast<Scalar>(s.count), s.min, s.max);
  return s;
}

/// Uniformity coefficient: one minus the coefficient of variation,
///   U = 1 - sqrt(sum_k (B_k - mean)^2 / m) / mean.
template <typename Derived>
auto uniformity(const Eigen::DenseBase<Derived>& values)
    -> BasicUniformityResult<typename Derived::Scalar> {
  using Scalar = typename Derived::Scalar;
  using std::sqrt;
  if (values.size() == 0) throw Error(ErrorCode::EmptyRaster, "uniformity of an empty raster");

  const auto m = static_cast<Scalar>(values.size());
  const auto array = values.derived().array().eval();
  BasicUniformityResult<Scalar> r;
  r.count = values.size();

  const Scalar lo = array.minCoeff();
  const Scalar hi = array.maxCoeff();
  if (lo == hi) {
    // Constant field: zero deviation by definition, independent of rounding in sum/m.
    r.mean = lo;
    r.stddev = Scalar(0);
  } else {
    r.mean = array.sum() / m;
    r.stddev = sqrt((array - r.mean).square().sum() / m);
  }
  if (r.mean == Scalar(0)) {
    throw Error(ErrorCode::ZeroMean, "uniformity is undefined when the mean benefit is 0");
  }
  r.u = Scalar(1) - r.stddev / r.mean;
  r.interpret_with_care = r.mean < Scalar(0);
  return r;
}

template <typename Scalar>
BasicSummaryStats<Scalar> summary(const BasicRaster<Scalar>& raster) {
  return summary(raster.values());
}

template <typename Scalar>
BasicUniformityResult<Scalar> uniformity(const BasicRaster<Scalar>& raster) {
  return uniformity(raster.values());
}

/// Which part of a decomposed field to measure.
enum class FieldComponent { All, Positive, Negative };

template <typename Scalar>
const BasicRaster<Scalar>& component(const BasicFieldResult<Scalar>& field, FieldComponent which) {
  switch (which) {
    case FieldComponent::Positive: return field.positive;
    case FieldComponent::Negative: return field.negative;
    case FieldComponent::All: break;
  }
  return field.total;
}

template <typename Scalar>
BasicUniformityResult<Scalar> uniformity(const BasicFieldResult<Scalar>& field,
                                         FieldComponent which) {
  return uniformity(component(field, which));
}

using SummaryStats = BasicSummaryStats<double>;
using UniformityResult = BasicUniformityResult<double>;

/// Preference Gap Gain: B_person - B_majority cell by cell. Positive cells are
/// where the person values a location more than the majority does.
/// `majority` std::nullopt falls back to the scene's designated majority, then
/// to the unmodified scene. Both fields share the kernel family; each takes
/// its own personal E when its profile defines one.
Raster pgg_field(const Scene& scene, std::string_view person,
                 std::optional<std::string_view> majority, const Kernel& kernel,
                 const GridSpec& grid, const FieldOptions& options = {});

/// Signed digest of a PGG raster.
struct PggSummary {
  SummaryStats stats;
  Eigen::Index gain_cells = 0;
  Eigen::Index loss_cells = 0;
  Eigen::Index neutral_cells = 0;
  double gain_total = 0.0;  // sum over positive cells
  double loss_total = 0.0;  // sum over negative cells
};

PggSummary pgg_summary(const Raster& pgg);

}  // namespace isobenefit
