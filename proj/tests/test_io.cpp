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

#include <filesystem>
#include <fstream>

#include "isobenefit/field.hpp"
#include "isobenefit/io.hpp"
#include "oracles.hpp"

using namespace isobenefit;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isobenefit::Error");
  return ErrorCode::InvalidArgument;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "isobenefit_io_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("format_number round-trips shortest text") {
  auto g = oracle::rng(51);
  for (int k = 0; k < 1000; ++k) {
    const double v = oracle::uniform(g, -1e6, 1e6) * std::pow(10.0, oracle::uniform(g, -20, 20));
    CHECK(io::parse_number(io::format_number(v), "v") == v);
  }
  CHECK(io::format_number(1.5) == "1.5");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(3.0) == "3");
  CHECK(code_of([] { io::parse_number("1.5x", "field"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_number("", "field"); }) == ErrorCode::Parse);
  CHECK(io::parse_number(" +2.5 ", "field") == 2.5);
}

TEST_CASE("scene JSON") {
  const std::string text = R"({
    "amenities": [{"id": "park", "x": 1, "y": 2.5, "A": 3},
                  {"id": "road", "x": -4, "y": 0, "A": -1.5}],
    "profiles": {"alice": {"E": 2, "overrides": {"park": 5}},
                 "bob": {"overrides": {}}},
    "majority": "bob"
  })";
  const auto s = io::parse_scene_json(text, "city.json");
  REQUIRE(s.amenities.size() == 2);
  CHECK(s.amenities[0].id == "park");
  CHECK(s.amenities[0].position == Point2d(1, 2.5));
  CHECK(s.amenities[1].attractiveness == -1.5);
  CHECK(s.profiles.at("alice").efficiency == 2.0);
  CHECK(s.profiles.at("alice").overrides.at("park") == 5.0);
  CHECK_FALSE(s.profiles.at("bob").efficiency.has_value());
  CHECK(s.majority == "bob");

  const auto again = io::parse_scene_json(io::scene_to_json(s).dump(), "again");
  CHECK(again.amenities[1].position == s.amenities[1].position);
  CHECK(again.profiles.at("alice").overrides == s.profiles.at("alice").overrides);
  CHECK(again.majority == s.majority);

  CHECK(message_of([] { io::parse_scene_json(R"({"amenities": [{"id": "a", "x": 1, "y": 2}]})", "c.json"); })
            .find("c.json: amenities[0]: missing field 'A'") != std::string::npos);
  CHECK(code_of([] { io::parse_scene_json("{", "bad.json"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_scene_json(R"({"amenities": 3})", "bad.json"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_scene_json(R"({"amenities": [{"id": 1, "x": 1, "y": 2, "A": 1}]})", "b"); }) ==
        ErrorCode::Parse);
}

TEST_CASE("scene CSV") {
  const auto s = io::parse_scene_csv("id,x,y,A\r\np,0,0,3\nq, 1.5 ,-2,-1\n\n", "a.csv");
  REQUIRE(s.amenities.size() == 2);
  CHECK(s.amenities[1].position == Point2d(1.5, -2));
  CHECK(s.amenities[1].attractiveness == -1.0);

  CHECK(message_of([] { io::parse_scene_csv("id,x,y,A\np,0,0\n", "a.csv"); }).find("a.csv:2") !=
        std::string::npos);
  CHECK(message_of([] { io::parse_scene_csv("id,x,y,A\np,0,0,3\nq,zero,0,1\n", "a.csv"); }).find("a.csv:3: x") !=
        std::string::npos);
  CHECK(code_of([] { io::parse_scene_csv("name,x,y,A\n", "a.csv"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::parse_scene_csv("", "a.csv"); }) == ErrorCode::Parse);
}

TEST_CASE("read_scene validates and names the file") {
  const auto dir = temp_dir();
  const auto path = dir / "dup.csv";
  std::ofstream(path) << "id,x,y,A\np,0,0,3\np,1,0,2\n";
  const auto msg = message_of([&] { io::read_scene(path); });
  CHECK(msg.find("DuplicateId") != std::string::npos);
  CHECK(msg.find("dup.csv") != std::string::npos);
  CHECK(code_of([&] { io::read_scene(dir / "missing.json"); }) == ErrorCode::Io);
}

TEST_CASE("raster CSV layout") {
  RowMajorArrayXXd v(2, 3);
  v << 1, 2, 3,      // bottom row
       4, 5.5, -6;   // top row
  const Raster r(GridSpec{{10, 20}, 0.5, 3, 2}, v);
  const auto text = io::format_raster_csv(r);
  CHECK(text == "# 3,2,10,20,0.5\n4,5.5,-6\n1,2,3\n");
  const auto back = io::parse_raster_csv(text, "r.csv");
  CHECK(back.grid() == r.grid());
  CHECK((back.values() == r.values()).all());

  CHECK(code_of([] { io::parse_raster_csv("1,2\n", "r.csv"); }) == ErrorCode::Parse);
  CHECK(message_of([] { io::parse_raster_csv("# 2,2,0,0,1\n1,2\n3\n", "r.csv"); }).find("r.csv:3") !=
        std::string::npos);
  CHECK(code_of([] { io::parse_raster_csv("# 2,1,0,0,1\n1,2\n3,4\n", "r.csv"); }) == ErrorCode::Parse);
}

TEST_CASE("ESRI ASCII layout") {
  RowMajorArrayXXd v(2, 2);
  v << 1, 2, 3, 4;
  const Raster r(GridSpec{{0.5, 1.5}, 1.0, 2, 2}, v);
  const auto text = io::format_raster_asc(r);
  CHECK(text ==
        "NCOLS 2\nNROWS 2\nXLLCORNER 0\nYLLCORNER 1\nCELLSIZE 1\nNODATA_VALUE -9999\n3 4\n1 2\n");
  const auto back = io::parse_raster_asc(text, "r.asc");
  CHECK(back.grid() == r.grid());
  CHECK((back.values() == r.values()).all());

  const auto centred = io::parse_raster_asc(
      "ncols 2\nnrows 1\nxllcenter 5\nyllcenter 6\ncellsize 2\n7 8\n", "c.asc");
  CHECK(centred.grid().origin == Point2d(5, 6));
  CHECK(centred(1, 0) == 8.0);
  CHECK(code_of([] { io::parse_raster_asc("NCOLS 1\nNROWS 1\nXLLCORNER 0\nYLLCORNER 0\nCELLSIZE 1\n"
                                          "NODATA_VALUE -9999\n-9999\n", "n.asc"); }) ==
        ErrorCode::NonFiniteValue);
  CHECK(code_of([] { io::parse_raster_asc("NCOLS 1\nNROWS 1\n0\n", "n.asc"); }) == ErrorCode::Parse);
}

TEST_CASE("raster text round-trips values exactly (randomized)") {
  auto g = oracle::rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index rows = 1 + trial % 5, cols = 1 + trial % 7;
    RowMajorArrayXXd v(rows, cols);
    for (Eigen::Index k = 0; k < v.size(); ++k) v.data()[k] = oracle::uniform(g, -1e3, 1e3);
    const Raster r(GridSpec{{oracle::uniform(g, -5, 5), 0.25}, 0.125, cols, rows}, v);
    for (auto format : {io::RasterFormat::Csv, io::RasterFormat::Asc}) {
      const auto text = io::format_raster(r, format);
      const auto back = format == io::RasterFormat::Csv ? io::parse_raster_csv(text, "t")
                                                        : io::parse_raster_asc(text, "t");
      CHECK((back.values() == r.values()).all());
      CHECK((back.grid().origin - r.grid().origin).norm() <= 1e-12);
    }
  }
}

TEST_CASE("GeoJSON contours round-trip") {
  ContourSet set;
  set.levels = {1.0, 2.0};
  set.lines.push_back({1.0, {{0, 0}, {1, 0}, {1, 1}}, true});
  set.lines.push_back({2.0, {{0.25, 0.5}, {0.75, 0.125}}, false});
  const auto doc = io::contours_to_geojson(set);
  CHECK(doc["type"] == "FeatureCollection");
  CHECK(doc["features"].size() == 2);
  CHECK(doc["features"][0]["geometry"]["type"] == "LineString");
  CHECK(doc["features"][0]["geometry"]["coordinates"].size() == 4);
  CHECK(doc["features"][0]["properties"]["level"] == 1.0);
  CHECK(doc["features"][0]["properties"].contains("crs_note"));

  const auto back = io::contours_from_geojson(nlohmann::json::parse(doc.dump()));
  REQUIRE(back.lines.size() == 2);
  CHECK(back.levels == set.levels);
  CHECK(back.lines[0].closed);
  CHECK(back.lines[0].points == set.lines[0].points);
  CHECK(back.lines[1].points == set.lines[1].points);
  CHECK(code_of([] { io::contours_from_geojson(nlohmann::json::object()); }) == ErrorCode::Parse);
}

TEST_CASE("atomic write replaces the file and leaves no temporary behind") {
  const auto dir = temp_dir() / "atomic";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto path = dir / "out.txt";
  io::write_file_atomic(path, "first");
  io::write_file_atomic(path, "second");
  CHECK(io::read_file(path) == "second");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK(code_of([&] { io::write_file_atomic(dir / "no" / "such" / "dir.txt", "x"); }) == ErrorCode::Io);
}
