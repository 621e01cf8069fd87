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

#include "isobenefit/scene.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace isobenefit {

std::string_view to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::Rational: return "rational";
    case KernelFamily::Gaussian: return "gaussian";
    case KernelFamily::Exponential: return "exponential";
  }
  return "unknown";
}

std::optional<KernelFamily> parse_kernel_family(std::string_view name) {
  if (name == "rational") return KernelFamily::Rational;
  if (name == "gaussian") return KernelFamily::Gaussian;
  if (name == "exponential") return KernelFamily::Exponential;
  return std::nullopt;
}

const Amenity* Scene::find_amenity(std::string_view id) const {
  auto it = std::find_if(amenities.begin(), amenities.end(),
                         [&](const Amenity& a) { return a.id == id; });
  return it == amenities.end() ? nullptr : &*it;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k) os << "; ";
    os << isobenefit::to_string(violations[k].code) << "(" << violations[k].subject
       << "): " << violations[k].message;
  }
  return os.str();
}

ValidationReport validate_scene(const Scene& scene) {
  ValidationReport report;
  auto add = [&](ErrorCode code, std::string subject, std::string message) {
    report.violations.push_back({code, std::move(subject), std::move(message)});
  };

  std::set<std::string> seen;
  std::set<std::string> reported_duplicates;
  for (const auto& a : scene.amenities) {
    if (a.id.empty()) {
      add(ErrorCode::EmptyId, "", "amenity id must be non-empty");
    } else if (!seen.insert(a.id).second && reported_duplicates.insert(a.id).second) {
      add(ErrorCode::DuplicateId, a.id, "amenity id appears more than once");
    }
    if (!std::isfinite(a.attractiveness)) {
      add(ErrorCode::NonFiniteValue, a.id, "attractiveness is not finite");
    }
    if (!std::isfinite(a.position.x()) || !std::isfinite(a.position.y())) {
      add(ErrorCode::NonFiniteValue, a.id, "position is not finite");
    }
  }

  for (const auto& [name, profile] : scene.profiles) {
    if (profile.efficiency &&
        !(std::isfinite(*profile.efficiency) && *profile.efficiency > 0.0)) {
      add(ErrorCode::NonPositiveEfficiency, name, "profile efficiency must be finite and > 0");
    }
    for (const auto& [target, value] : profile.overrides) {
      if (!seen.count(target)) {
        add(ErrorCode::UnknownOverrideTarget, target,
            "profile '" + name + "' overrides an amenity that does not exist");
      }
      if (!std::isfinite(value)) {
        add(ErrorCode::NonFiniteValue, target,
            "profile '" + name + "' override is not finite");
      }
    }
  }

  if (scene.majority && *scene.majority != kBaselineName &&
      !scene.profiles.count(*scene.majority)) {
    add(ErrorCode::UnknownProfile, *scene.majority, "designated majority profile does not exist");
  }
  return report;
}

const Scene& require_valid(const Scene& scene) {
  auto report = validate_scene(scene);
  if (!report.ok()) {
    throw Error(report.violations.front().code, report.to_string());
  }
  return scene;
}

ResolvedScene resolve_profile(const Scene& scene, std::optional<std::string_view> profile_name,
                              const Kernel& kernel) {
  ResolvedScene resolved{scene.amenities, kernel};
  if (!profile_name) return resolved;

  auto it = scene.profiles.find(std::string(*profile_name));
  if (it == scene.profiles.end()) {
    if (*profile_name == kBaselineName) return resolved;
    throw Error(ErrorCode::UnknownProfile, "no profile named '" + std::string(*profile_name) + "'");
  }
  const Profile& profile = it->second;
  for (auto& a : resolved.amenities) {
    if (auto o = profile.overrides.find(a.id); o != profile.overrides.end()) {
      a.attractiveness = o->second;
    }
  }
  if (profile.efficiency) resolved.kernel.efficiency = *profile.efficiency;
  return resolved;
}

std::optional<std::string> majority_name(const Scene& scene,
                                         std::optional<std::string_view> requested) {
  if (requested) return std::string(*requested);
  return scene.majority;
}

}  // namespace isobenefit
