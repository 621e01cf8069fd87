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

#include "isobenefit/field.hpp"

namespace isobenefit {

FieldResult evaluate_field(const Scene& scene, std::optional<std::string_view> profile,
                           const Kernel& kernel, const GridSpec& grid,
                           const FieldOptions& options) {
  require_valid(scene);
  const auto resolved = resolve_profile(scene, profile, kernel);
  return evaluate_field<double>(resolved.amenities, resolved.kernel, grid, options);
}

}  // namespace isobenefit
