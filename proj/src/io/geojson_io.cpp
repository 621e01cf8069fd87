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

#include "isobenefit/io.hpp"

namespace isobenefit::io {

using nlohmann::json;

namespace {
constexpr const char* kCrsNote = "coordinates are planar scene units; no CRS is implied";
}

json contours_to_geojson(const ContourSet& contours) {
  json features = json::array();
  for (const auto& line : contours.lines) {
    json coords = json::array();
    for (const auto& p : line.points) coords.push_back({p.x(), p.y()});
    if (line.closed && !line.points.empty()) {
      coords.push_back({line.points.front().x(), line.points.front().y()});
    }
    features.push_back({
        {"type", "Feature"},
        {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
        {"properties", {{"level", line.level}, {"closed", line.closed}, {"crs_note", kCrsNote}}},
    });
  }
  json doc = {{"type", "FeatureCollection"}, {"levels", contours.levels}, {"features", features}};
  if (!contours.warnings.empty()) doc["warnings"] = contours.warnings;
  return doc;
}

ContourSet contours_from_geojson(const json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection") {
    throw Error(ErrorCode::Parse, "GeoJSON: expected a FeatureCollection");
  }
  ContourSet set;
  try {
    if (doc.contains("levels")) set.levels = doc.at("levels").get<std::vector<double>>();
    if (doc.contains("warnings")) set.warnings = doc.at("warnings").get<std::vector<std::string>>();
    for (const auto& feature : doc.at("features")) {
      ContourLine line;
      line.level = feature.at("properties").at("level").get<double>();
      line.closed = feature.at("properties").value("closed", false);
      for (const auto& c : feature.at("geometry").at("coordinates")) {
        line.points.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
      }
      if (line.closed && line.points.size() > 1) line.points.pop_back();
      set.lines.push_back(std::move(line));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("GeoJSON: ") + e.what());
  }
  return set;
}

}  // namespace isobenefit::io
