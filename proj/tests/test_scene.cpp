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

#include <doctest.h>

#include "isobenefit/scene.hpp"
#include "oracles.hpp"

using namespace isobenefit;

namespace {

Amenity amenity(std::string id, double x, double y, double a) {
  return Amenity{std::move(id), {x, y}, a};
}

bool has_violation(const ValidationReport& r, ErrorCode code, const std::string& subject) {
  for (const auto& v : r.violations) {
    if (v.code == code && v.subject == subject) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("minimal scene is valid") {
  Scene s;
  s.amenities.push_back(amenity("p", 0, 0, 3));
  CHECK(validate_scene(s).ok());
  CHECK(&require_valid(s) == &s);
}

TEST_CASE("validation reports every violation") {
  Scene s;
  s.amenities.push_back(amenity("p", 0, 0, 3));
  s.amenities.push_back(amenity("p", 1, 0, 2));
  s.amenities.push_back(amenity("q", 0, 0, NAN));
  s.amenities.push_back(amenity("", 0, 0, 1));
  s.profiles["alice"] = Profile{"alice", -1.0, {{"ghost", 2.0}}};
  s.majority = "nobody";

  const auto r = validate_scene(s);
  CHECK_FALSE(r.ok());
  CHECK(has_violation(r, ErrorCode::DuplicateId, "p"));
  CHECK(has_violation(r, ErrorCode::NonFiniteValue, "q"));
  CHECK(has_violation(r, ErrorCode::EmptyId, ""));
  CHECK(has_violation(r, ErrorCode::UnknownOverrideTarget, "ghost"));
  CHECK(has_violation(r, ErrorCode::NonPositiveEfficiency, "alice"));
  CHECK(has_violation(r, ErrorCode::UnknownProfile, "nobody"));
  CHECK(r.violations.size() == 6);

  try {
    require_valid(s);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateId);
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }
}

TEST_CASE("dangling override alone") {
  Scene s;
  s.amenities.push_back(amenity("p", 0, 0, 3));
  s.profiles["x"] = Profile{"x", std::nullopt, {{"ghost", 1.0}}};
  const auto r = validate_scene(s);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].code == ErrorCode::UnknownOverrideTarget);
  CHECK(r.violations[0].subject == "ghost");
}

TEST_CASE("baseline is an acceptable majority name") {
  Scene s;
  s.amenities.push_back(amenity("p", 0, 0, 3));
  s.majority = std::string(kBaselineName);
  CHECK(validate_scene(s).ok());
}

TEST_CASE("resolve_profile") {
  Scene s;
  s.amenities.push_back(amenity("p", 1, 2, 3));
  s.amenities.push_back(amenity("q", -1, 0, -1));
  s.profiles["plain"] = Profile{"plain", std::nullopt, {}};
  s.profiles["alice"] = Profile{"alice", 2.0, {{"p", 5.0}}};
  const Kernel k{KernelFamily::Rational, 1.0};

  SUBCASE("no overrides is identity") {
    auto r = resolve_profile(s, "plain", k);
    CHECK(r.amenities[0].attractiveness == 3.0);
    CHECK(r.kernel.efficiency == 1.0);
  }
  SUBCASE("overrides and personal E") {
    auto r = resolve_profile(s, "alice", k);
    CHECK(r.amenities[0].attractiveness == 5.0);
    CHECK(r.amenities[1].attractiveness == -1.0);
    CHECK(r.kernel.efficiency == 2.0);
    CHECK(r.kernel.family == KernelFamily::Rational);
  }
  SUBCASE("absent name is the baseline") {
    auto r = resolve_profile(s, std::nullopt, k);
    CHECK(r.amenities[0].attractiveness == 3.0);
    r = resolve_profile(s, kBaselineName, k);
    CHECK(r.amenities[0].attractiveness == 3.0);
  }
  SUBCASE("unknown profile") {
    try {
      resolve_profile(s, "missing", k);
      FAIL("expected UnknownProfile");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownProfile);
    }
  }
}

TEST_CASE("resolution keeps positions and ids; empty profile is identity (randomized)") {
  auto g = oracle::rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Scene s;
    const int n = 1 + static_cast<int>(oracle::uniform(g, 0, 20));
    for (int k = 0; k < n; ++k) {
      s.amenities.push_back(oracle::random_amenity(g, "a" + std::to_string(k), 50, -5, 5));
    }
    Profile p{"p", oracle::uniform(g, 0.1, 5), {}};
    for (int k = 0; k < n; k += 2) p.overrides["a" + std::to_string(k)] = oracle::uniform(g, -5, 5);
    s.profiles["p"] = p;
    s.profiles["empty"] = Profile{"empty", std::nullopt, {}};
    REQUIRE(validate_scene(s).ok());
    CHECK(validate_scene(require_valid(s)).ok());

    const Kernel k{KernelFamily::Gaussian, 0.7};
    auto r = resolve_profile(s, "p", k);
    auto e = resolve_profile(s, "empty", k);
    REQUIRE(r.amenities.size() == s.amenities.size());
    for (std::size_t i = 0; i < s.amenities.size(); ++i) {
      CHECK(r.amenities[i].id == s.amenities[i].id);
      CHECK(r.amenities[i].position == s.amenities[i].position);
      CHECK(e.amenities[i].attractiveness == s.amenities[i].attractiveness);
    }
    CHECK(e.kernel.efficiency == k.efficiency);
  }
}

TEST_CASE("kernel family names") {
  CHECK(parse_kernel_family("rational") == KernelFamily::Rational);
  CHECK(parse_kernel_family("gaussian") == KernelFamily::Gaussian);
  CHECK(parse_kernel_family("exponential") == KernelFamily::Exponential);
  CHECK_FALSE(parse_kernel_family("cubic").has_value());
  CHECK(to_string(KernelFamily::Gaussian) == "gaussian");
}

TEST_CASE("kernel and grid checks") {
  CHECK_THROWS_AS(check_kernel(Kernel{KernelFamily::Rational, 0.0}), Error);
  CHECK_THROWS_AS(check_kernel(Kernel{KernelFamily::Rational, INFINITY}), Error);
  CHECK_NOTHROW(check_kernel(Kernel{KernelFamily::Rational, 1e-9}));
  GridSpec g;
  g.cell_size = 0;
  CHECK_THROWS_AS(check_grid(g), Error);
  g.cell_size = 1;
  g.ncols = 0;
  CHECK_THROWS_AS(check_grid(g), Error);
  g = GridSpec{{10, 20}, 0.5, 4, 3};
  CHECK(g.cell_center(2, 1) == Point2d(11, 20.5));
  CHECK(g.max_corner() == Point2d(11.5, 21));
}
