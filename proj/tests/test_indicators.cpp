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

#include "isobenefit/indicators.hpp"
#include "oracles.hpp"

using namespace isobenefit;

namespace {

Raster raster_of(std::initializer_list<double> values) {
  RowMajorArrayXXd v(1, static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (double x : values) v(0, k++) = x;
  return Raster(GridSpec{{0, 0}, 1.0, v.cols(), 1}, v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isobenefit::Error");
  return ErrorCode::InvalidArgument;
}

Scene two_park_scene() {
  Scene s;
  s.amenities.push_back({"park", {0, 0}, 3.0});
  s.amenities.push_back({"square", {6, 2}, 2.0});
  s.amenities.push_back({"road", {3, -4}, -1.0});
  s.profiles["alice"] = Profile{"alice", std::nullopt, {{"park", 5.0}}};
  s.profiles["bob"] = Profile{"bob", 2.5, {}};
  s.profiles["same"] = Profile{"same", std::nullopt, {}};
  return s;
}

}  // namespace

TEST_CASE("uniformity examples") {
  SUBCASE("constant raster") {
    for (double c : {0.1, 1.0, 3.7, 1e6}) {
      RowMajorArrayXXd v = RowMajorArrayXXd::Constant(7, 9, c);
      const auto u = uniformity(Raster(GridSpec{{0, 0}, 1, 9, 7}, v));
      CHECK(u.u == 1.0);
      CHECK(u.stddev == 0.0);
      CHECK(u.mean == c);
    }
  }
  SUBCASE("values 1,2,3") {
    const auto u = uniformity(raster_of({1, 2, 3}));
    CHECK(u.mean == 2.0);
    CHECK(u.stddev == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(u.u == doctest::Approx(0.591751709536137).epsilon(1e-12));
    CHECK(u.count == 3);
    CHECK_FALSE(u.interpret_with_care);
  }
  SUBCASE("zero mean and empty") {
    CHECK(code_of([] { uniformity(raster_of({0, 0, 0})); }) == ErrorCode::ZeroMean);
    CHECK(code_of([] { uniformity(raster_of({-1, 1})); }) == ErrorCode::ZeroMean);
    RowMajorArrayXXd empty(0, 0);
    CHECK(code_of([&] { uniformity(empty); }) == ErrorCode::EmptyRaster);
    CHECK(code_of([&] { summary(empty); }) == ErrorCode::EmptyRaster);
  }
  SUBCASE("negative mean is flagged") {
    const auto u = uniformity(raster_of({-1, -2, -3}));
    CHECK(u.interpret_with_care);
    CHECK(u.u == doctest::Approx(1.0 + std::sqrt(2.0 / 3.0) / 2.0));
  }
}

TEST_CASE("uniformity accepts Eigen expressions") {
  RowMajorArrayXXd a(1, 3), b(1, 3);
  a << 0.5, 1, 1.5;
  b << 0.5, 1, 1.5;
  const auto u = uniformity(a + b);
  CHECK(u.u == doctest::Approx(0.591751709536137).epsilon(1e-12));
}

TEST_CASE("summary examples") {
  auto s = summary(raster_of({1, 2, 3}));
  CHECK(s.total == 6.0);
  CHECK(s.mean == 2.0);
  CHECK(s.min == 1.0);
  CHECK(s.max == 3.0);
  CHECK(s.count == 3);

  RowMajorArrayXXd c = RowMajorArrayXXd::Constant(3, 1, 0.1);
  s = summary(c);
  CHECK(s.total == doctest::Approx(0.3));
  CHECK(s.min == 0.1);
  CHECK(s.max == 0.1);
  CHECK(s.mean <= s.max);
  CHECK(s.mean >= s.min);

  s = summary(raster_of({-5}));
  CHECK(s.total == -5.0);
  CHECK(s.mean == -5.0);
}

TEST_CASE("summary and uniformity properties (randomized)") {
  auto g = oracle::rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index rows = 1 + trial % 17, cols = 1 + (trial * 7) % 23;
    RowMajorArrayXXd v(rows, cols);
    for (Eigen::Index k = 0; k < v.size(); ++k) v.data()[k] = oracle::uniform(g, 0.01, 10);
    const auto s = summary(v);
    CHECK(s.min <= s.mean);
    CHECK(s.mean <= s.max);
    const double ref = oracle::pairwise_sum(v.data(), static_cast<std::size_t>(v.size()));
    CHECK(std::abs(s.total - ref) <= 1e-9 * std::abs(ref));
    CHECK(std::abs(s.total - s.mean * static_cast<double>(s.count)) <= 1e-9 * std::abs(s.total));

    const auto u = uniformity(v);
    CHECK(u.u <= 1.0);
    if (v.size() > 1 && s.min != s.max) CHECK(u.u < 1.0);
    for (double c : {0.5, 2.0, 10.0}) {
      CHECK(uniformity((c * v).eval()).u == doctest::Approx(u.u).epsilon(1e-9));
    }
  }
}

TEST_CASE("U is invariant under scaling every A") {
  auto g = oracle::rng(22);
  Scene s;
  for (int k = 0; k < 10; ++k) s.amenities.push_back(oracle::random_amenity(g, std::to_string(k), 10, 0.5, 5));
  const GridSpec grid{{-12, -12}, 1.0, 25, 25};
  const Kernel k{KernelFamily::Rational, 1.0};
  const auto base = uniformity(evaluate_field(s, std::nullopt, k, grid).total).u;
  for (double c : {0.5, 2.0, 10.0}) {
    Scene scaled = s;
    for (auto& a : scaled.amenities) a.attractiveness *= c;
    CHECK(uniformity(evaluate_field(scaled, std::nullopt, k, grid).total).u ==
          doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("uniformity per field component") {
  const auto f = evaluate_field(two_park_scene(), std::nullopt, Kernel{}, GridSpec{{-5, -5}, 1, 15, 12});
  CHECK(uniformity(f, FieldComponent::All).u == uniformity(f.total).u);
  CHECK(uniformity(f, FieldComponent::Positive).u == uniformity(f.positive).u);
  const auto neg = uniformity(f, FieldComponent::Negative);
  CHECK(neg.interpret_with_care);
}

TEST_CASE("pgg_field") {
  const Scene s = two_park_scene();
  const Kernel k{KernelFamily::Rational, 1.0};
  const GridSpec grid{{-5, -6}, 0.5, 30, 24};

  SUBCASE("identical profiles give an exactly zero raster") {
    CHECK((pgg_field(s, "same", std::nullopt, k, grid).values() == 0.0).all());
    CHECK((pgg_field(s, "alice", "alice", k, grid).values() == 0.0).all());
  }
  SUBCASE("single override equals the difference amenity field") {
    const auto pgg = pgg_field(s, "alice", std::nullopt, k, grid);
    Scene diff;
    diff.amenities.push_back({"park", {0, 0}, 2.0});
    const auto expect = evaluate_field(diff, std::nullopt, k, grid).total.values();
    CHECK(((pgg.values() - expect).abs() <= 1e-12).all());
    // Direct two-field subtraction oracle.
    const auto pl = oracle::plain(s.amenities);
    auto personal = pl;
    personal[0].a = 5.0;
    for (Eigen::Index j = 0; j < grid.nrows; j += 5) {
      for (Eigen::Index i = 0; i < grid.ncols; i += 5) {
        const auto c = grid.cell_center(i, j);
        const double ref = oracle::field_at(personal, k.family, 1.0, c.x(), c.y()) -
                           oracle::field_at(pl, k.family, 1.0, c.x(), c.y());
        CHECK(pgg(i, j) == doctest::Approx(ref).epsilon(1e-12));
      }
    }
  }
  SUBCASE("personal E only: zero at the amenity cell, nonzero away") {
    Scene one;
    one.amenities.push_back({"p", {0, 0}, 3.0});
    one.profiles["far"] = Profile{"far", 3.0, {}};
    const GridSpec g{{-2, -2}, 1.0, 5, 5};
    const auto pgg = pgg_field(one, "far", std::nullopt, k, g);
    CHECK(pgg(2, 2) == 0.0);
    CHECK(pgg(0, 0) > 0.0);  // larger rational E decays slower
    CHECK(pgg(0, 0) == doctest::Approx(3.0 / (1 + std::sqrt(8.0) / 3) - 3.0 / (1 + std::sqrt(8.0))));
  }
  SUBCASE("antisymmetry is bitwise") {
    const auto pq = pgg_field(s, "alice", "bob", k, grid);
    const auto qp = pgg_field(s, "bob", "alice", k, grid);
    CHECK((pq.values() == -qp.values()).all());
  }
  SUBCASE("designated majority is used by default") {
    Scene withmaj = s;
    withmaj.majority = "bob";
    const auto a = pgg_field(withmaj, "alice", std::nullopt, k, grid);
    const auto b = pgg_field(withmaj, "alice", "bob", k, grid);
    CHECK((a.values() == b.values()).all());
  }
  SUBCASE("unknown profile") {
    CHECK(code_of([&] { pgg_field(s, "zed", std::nullopt, k, grid); }) == ErrorCode::UnknownProfile);
    CHECK(code_of([&] { pgg_field(s, "alice", "zed", k, grid); }) == ErrorCode::UnknownProfile);
  }
}

TEST_CASE("pgg_summary splits gains and losses") {
  RowMajorArrayXXd v(1, 5);
  v << -2, -1, 0, 1, 3;
  const auto s = pgg_summary(Raster(GridSpec{{0, 0}, 1, 5, 1}, v));
  CHECK(s.gain_cells == 2);
  CHECK(s.loss_cells == 2);
  CHECK(s.neutral_cells == 1);
  CHECK(s.gain_total == 4.0);
  CHECK(s.loss_total == -3.0);
  CHECK(s.stats.total == 1.0);
}
