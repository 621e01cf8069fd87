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

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isobenefit/error.hpp"
#include "isobenefit/types.hpp"

namespace isobenefit {

/// A point attraction. Positive attractiveness is an amenity, negative a
/// disamenity (busy road, derelict site), zero is inert.
template <typename Scalar>
struct BasicAmenity {
  std::string id;
  Point2<Scalar> position = Point2<Scalar>::Zero();
  Scalar attractiveness = Scalar(0);
};

enum class KernelFamily { Rational, Gaussian, Exponential };

std::string_view to_string(KernelFamily family);
std::optional<KernelFamily> parse_kernel_family(std::string_view name);

/// Distance-decay law plus the moving-efficiency coefficient E.
///
/// The same letter carries opposite meaning across families:
///   rational     A / (1 + d/E)     larger E decays slower
///   gaussian     A * exp(-E d^2)   larger E decays faster
///   exponential  A * exp(-E d)     larger E decays faster
template <typename Scalar>
struct BasicKernel {
  KernelFamily family = KernelFamily::Rational;
  Scalar efficiency = Scalar(1);
};

/// Throws NonPositiveEfficiency unless efficiency is finite and > 0.
template <typename Scalar>
void check_kernel(const BasicKernel<Scalar>& kernel) {
  using std::isfinite;
  if (!isfinite(kernel.efficiency) || !(kernel.efficiency > Scalar(0))) {
    throw Error(ErrorCode::NonPositiveEfficiency,
                "kernel efficiency must be finite and > 0, got " +
                    std::to_string(static_cast<double>(kernel.efficiency)));
  }
}

/// Evaluation lattice. Cell (i, j) is centred at origin + (i, j) * cell_size;
/// origin is the centre of the lower-left cell.
template <typename Scalar>
struct BasicGridSpec {
  Point2<Scalar> origin = Point2<Scalar>::Zero();
  Scalar cell_size = Scalar(1);
  Eigen::Index ncols = 1;
  Eigen::Index nrows = 1;

  Point2<Scalar> cell_center(Eigen::Index col, Eigen::Index row) const {
    return {origin.x() + static_cast<Scalar>(col) * cell_size,
            origin.y() + static_cast<Scalar>(row) * cell_size};
  }

  Eigen::Index size() const { return ncols * nrows; }

  // Bounding box of the cell centres.
  Point2<Scalar> min_corner() const { return origin; }
  Point2<Scalar> max_corner() const { return cell_center(ncols - 1, nrows - 1); }

  bool operator==(const BasicGridSpec&) const = default;
};

template <typename Scalar>
void check_grid(const BasicGridSpec<Scalar>& grid) {
  using std::isfinite;
  if (!isfinite(grid.origin.x()) || !isfinite(grid.origin.y())) {
    throw Error(ErrorCode::InvalidGrid, "grid origin must be finite");
  }
  if (!isfinite(grid.cell_size) || !(grid.cell_size > Scalar(0))) {
    throw Error(ErrorCode::InvalidGrid, "grid cell_size must be finite and > 0");
  }
  if (grid.ncols < 1 || grid.nrows < 1) {
    throw Error(ErrorCode::InvalidGrid, "grid needs ncols >= 1 and nrows >= 1");
  }
}

using Amenity = BasicAmenity<double>;
using Kernel = BasicKernel<double>;
using GridSpec = BasicGridSpec<double>;

/// A named preference set: personal E and personal attractiveness values.
struct Profile {
  std::string name;
  std::optional<double> efficiency;
  std::map<std::string, double> overrides;
};

/// Reserved majority name meaning "the scene as written", used when no
/// profile of that name exists.
inline constexpr std::string_view kBaselineName = "baseline";

struct Scene {
  std::vector<Amenity> amenities;
  std::map<std::string, Profile> profiles;
  std::optional<std::string> majority;

  const Amenity* find_amenity(std::string_view id) const;
};

struct Violation {
  ErrorCode code;
  std::string subject;  // offending id / profile name
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every scene invariant and lists all violations, not just the first.
ValidationReport validate_scene(const Scene& scene);

/// Returns the scene unchanged if valid; otherwise throws an Error carrying the
/// code of the first violation and the full report as its message.
const Scene& require_valid(const Scene& scene);

struct ResolvedScene {
  std::vector<Amenity> amenities;
  Kernel kernel;
};

/// Applies a profile's attractiveness overrides and personal E. An empty
/// profile name (std::nullopt) yields the scene unchanged. The reserved name
/// "baseline" resolves to the unmodified scene unless a profile is named so.
ResolvedScene resolve_profile(const Scene& scene, std::optional<std::string_view> profile_name,
                              const Kernel& kernel);

/// Majority profile resolution: an explicit name wins, then the scene's
/// designated majority, then the unmodified baseline.
std::optional<std::string> majority_name(const Scene& scene,
                                         std::optional<std::string_view> requested);

}  // namespace isobenefit
