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

#include "isobenefit/indicators.hpp"

namespace isobenefit {

Raster pgg_field(const Scene& scene, std::string_view person,
                 std::optional<std::string_view> majority, const Kernel& kernel,
                 const GridSpec& grid, const FieldOptions& options) {
  require_valid(scene);
  const auto majority_profile = majority_name(scene, majority);
  const auto personal = evaluate_field(scene, person, kernel, grid, options);
  const auto baseline =
      evaluate_field(scene,
                     majority_profile ? std::optional<std::string_view>(*majority_profile)
                                      : std::nullopt,
                     kernel, grid, options);
  return with_values(personal.total, personal.total.values() - baseline.total.values());
}

PggSummary pgg_summary(const Raster& pgg) {
  PggSummary s;
  s.stats = summary(pgg);
  const auto& v = pgg.values();
  s.gain_cells = (v > 0.0).count();
  s.loss_cells = (v < 0.0).count();
  s.neutral_cells = v.size() - s.gain_cells - s.loss_cells;
  s.gain_total = v.max(0.0).sum();
  s.loss_total = v.min(0.0).sum();
  return s;
}

}  // namespace isobenefit
