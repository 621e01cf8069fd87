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
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "isobenefit/field.hpp"

namespace isobenefit {

template <typename Scalar>
struct BasicHuffEntry {
  std::string id;
  Scalar distance = Scalar(0);
  Scalar probability = Scalar(0);
};

template <typename Scalar>
struct BasicHuffResult {
  std::vector<BasicHuffEntry<Scalar>> entries;  // input order

  const BasicHuffEntry<Scalar>* find(std::string_view id) const {
    for (const auto& e : entries) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }
};

/// Probability that a citizen at `origin` visits each amenity:
///   P_j = (A_j / d_j^lambda) / sum_k (A_k / d_k^lambda).
/// lambda = 1 is the plain attractiveness-over-distance ratio; other values
/// are an extension for experimenting with steeper or flatter decay.
template <typename Scalar>
BasicHuffResult<Scalar> huff_probabilities(const Point2<Scalar>& origin,
                                           std::type_identity_t<std::span<const BasicAmenity<Scalar>>> amenities,
                                           Scalar distance_exponent = Scalar(1)) {
  using std::pow;
  if (amenities.empty()) throw Error(ErrorCode::EmptyChoiceSet, "no amenities to choose from");
  BasicHuffResult<Scalar> result;
  result.entries.reserve(amenities.size());
  std::vector<Scalar> weights;
  weights.reserve(amenities.size());
  Scalar sum = Scalar(0);
  for (const auto& a : amenities) {
    if (!(a.attractiveness > Scalar(0))) {
      throw Error(ErrorCode::NonPositiveAttractiveness,
                  "amenity '" + a.id + "' needs A > 0 to act as an attraction");
    }
    const Scalar d = (a.position - origin).norm();
    if (!(d > Scalar(0))) {
      throw Error(ErrorCode::OriginOnAmenity, "origin coincides with amenity '" + a.id + "'");
    }
    const Scalar w = distance_exponent == Scalar(1)
                         ? a.attractiveness / d
                         : a.attractiveness / pow(d, distance_exponent);
    weights.push_back(w);
    sum += w;
    result.entries.push_back({a.id, d, Scalar(0)});
  }
  for (std::size_t k = 0; k < weights.size(); ++k) {
    result.entries[k].probability = weights[k] / sum;
  }
  return result;
}

template <typename Scalar>
struct BasicBreakPoint {
  Point2<Scalar> position = Point2<Scalar>::Zero();
  Scalar distance_from_1 = Scalar(0);
  Scalar distance_from_2 = Scalar(0);
  std::optional<Scalar> benefit_at_point;  // numeric search only
};

namespace detail {

template <typename Scalar>
Scalar pair_distance(const BasicAmenity<Scalar>& first, const BasicAmenity<Scalar>& second) {
  const Scalar d = (second.position - first.position).norm();
  if (!(d > Scalar(0))) {
    throw Error(ErrorCode::CoincidentAmenities,
                "amenities '" + first.id + "' and '" + second.id + "' share a position");
  }
  return d;
}

// Point at fraction t of the way from `second` to `first`. Written as a
// weighted sum so that t = 1/2 gives the correctly rounded midpoint.
template <typename Scalar>
Point2<Scalar> toward_first(const BasicAmenity<Scalar>& first, const BasicAmenity<Scalar>& second,
                            Scalar t) {
  return t * first.position + (Scalar(1) - t) * second.position;
}

}  // namespace detail

/// Reilly's boundary of equal attraction, Br = d / (1 + sqrt(A1/A2)),
/// measured from amenity 2. With A1 > A2 the boundary sits nearer amenity 2.
template <typename Scalar>
BasicBreakPoint<Scalar> reilly_breakpoint(const BasicAmenity<Scalar>& first,
                                          const BasicAmenity<Scalar>& second) {
  using std::sqrt;
  if (!(first.attractiveness > Scalar(0)) || !(second.attractiveness > Scalar(0))) {
    throw Error(ErrorCode::NonPositiveAttractiveness,
                "Reilly breakpoint needs both attractiveness values > 0");
  }
  const Scalar d = detail::pair_distance(first, second);
  const Scalar br = d / (Scalar(1) + sqrt(first.attractiveness / second.attractiveness));
  BasicBreakPoint<Scalar> bp;
  bp.distance_from_2 = br;
  bp.distance_from_1 = d - br;
  bp.position = detail::toward_first(first, second, br / d);
  return bp;
}

struct BreakpointOptions {
  int resolution = 101;       // coarse interior samples, >= 3
  double tolerance = 1e-6;    // refinement stops at tolerance * d
};

/// Locates the benefit minimum on the open segment between two amenities: the
/// point where a marble dropped on the benefit surface along that line settles.
///
/// The segment is sampled at `resolution` interior points plus its ends, the
/// lowest sample is bracketed by its neighbours and refined by golden-section
/// search. With `context` the sum also includes every other amenity in it
/// (entries sharing an id with the pair are skipped, so the full scene list
/// can be passed).
/// Throws NoInteriorMinimum when the refined minimum is not strictly below
/// both endpoints, i.e. the profile falls monotonically into one amenity.
template <typename Scalar>
BasicBreakPoint<Scalar> numeric_breakpoint(
    const BasicAmenity<Scalar>& first, const BasicAmenity<Scalar>& second,
    const BasicKernel<Scalar>& kernel,
    std::type_identity_t<std::optional<std::span<const BasicAmenity<Scalar>>>> context = std::nullopt,
    const BreakpointOptions& options = {}) {
  check_kernel(kernel);
  if (options.resolution < 3) {
    throw Error(ErrorCode::InvalidResolution, "breakpoint resolution must be >= 3");
  }
  if (!(options.tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidResolution, "breakpoint tolerance must be > 0");
  }
  const Scalar d = detail::pair_distance(first, second);

  std::vector<BasicAmenity<Scalar>> amenities{first, second};
  if (context) {
    for (const auto& a : *context) {
      if (a.id != first.id && a.id != second.id) amenities.push_back(a);
    }
  }
  // t runs from 0 at the first amenity to 1 at the second.
  auto benefit = [&](Scalar t) {
    const Point2<Scalar> p = detail::toward_first(first, second, Scalar(1) - t);
    return point_benefit<Scalar>(amenities, kernel, p).total;
  };

  // Samples k = 0 .. n+1 at t = k / (n + 1); 0 and n+1 are the amenities.
  // The lowest sample is refined even when it is an endpoint, since a minimum
  // can hide inside the first or last cell.
  const int n = options.resolution;
  auto sample_t = [n](int k) { return static_cast<Scalar>(k) / static_cast<Scalar>(n + 1); };
  const Scalar at_first = benefit(Scalar(0));
  const Scalar at_second = benefit(Scalar(1));
  int best = 0;
  Scalar best_value = at_first;
  for (int k = 1; k <= n + 1; ++k) {
    const Scalar v = k == n + 1 ? at_second : benefit(sample_t(k));
    if (v < best_value) {
      best = k;
      best_value = v;
    }
  }

  // Golden-section search on [lo, hi].
  const Scalar inv_phi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  Scalar lo = sample_t(std::max(best - 1, 0));
  Scalar hi = sample_t(std::min(best + 1, n + 1));
  Scalar x1 = hi - inv_phi * (hi - lo);
  Scalar x2 = lo + inv_phi * (hi - lo);
  Scalar f1 = benefit(x1);
  Scalar f2 = benefit(x2);
  const auto tol = static_cast<Scalar>(options.tolerance);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = benefit(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = benefit(x2);
    }
  }
  Scalar t = Scalar(0.5) * (lo + hi);
  Scalar value = benefit(t);
  if (best_value < value) {
    t = sample_t(best);
    value = best_value;
  }
  if (!(value < at_first && value < at_second)) {
    throw Error(ErrorCode::NoInteriorMinimum,
                "benefit between '" + first.id + "' and '" + second.id +
                    "' has no interior minimum");
  }

  BasicBreakPoint<Scalar> bp;
  bp.distance_from_1 = t * d;
  bp.distance_from_2 = d - bp.distance_from_1;
  bp.position = detail::toward_first(first, second, Scalar(1) - t);
  bp.benefit_at_point = value;
  return bp;
}

using HuffEntry = BasicHuffEntry<double>;
using HuffResult = BasicHuffResult<double>;
using BreakPoint = BasicBreakPoint<double>;

}  // namespace isobenefit
