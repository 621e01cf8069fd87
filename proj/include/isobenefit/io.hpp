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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isobenefit/isolines.hpp"
#include "isobenefit/raster.hpp"
#include "isobenefit/scene.hpp"

namespace isobenefit::io {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

/// Strict full-string parse; `what` names the input in the error message.
double parse_number(std::string_view text, const std::string& what);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so a failed
/// run never leaves a partial output behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Scene files. JSON:
//   { "amenities": [{"id": str, "x": num, "y": num, "A": num}, ...],
//     "profiles": { name: {"E": num?, "overrides": {id: num}} }?,
//     "majority": str? }
// CSV: header `id,x,y,A`, one amenity per line.
Scene parse_scene_json(std::string_view text, const std::string& source);
Scene parse_scene_csv(std::string_view text, const std::string& source);
nlohmann::json scene_to_json(const Scene& scene);
/// Dispatches on extension (.csv, anything else is JSON) and validates.
Scene read_scene(const std::filesystem::path& path);

enum class RasterFormat { Csv, Asc };

// Raster CSV: first line `# ncols,nrows,origin_x,origin_y,cell_size`, then
// nrows comma-separated lines, top row first.
std::string format_raster_csv(const Raster& raster);
Raster parse_raster_csv(std::string_view text, const std::string& source);

// ESRI ASCII grid, NODATA_VALUE -9999, rows top to bottom. XLLCORNER is the
// outer corner of the lower-left cell (origin minus half a cell).
std::string format_raster_asc(const Raster& raster);
Raster parse_raster_asc(std::string_view text, const std::string& source);

std::string format_raster(const Raster& raster, RasterFormat format);
Raster read_raster(const std::filesystem::path& path);

// GeoJSON FeatureCollection of LineString features carrying `level` and
// `closed` properties. Closed rings repeat their first vertex in the output.
nlohmann::json contours_to_geojson(const ContourSet& contours);
ContourSet contours_from_geojson(const nlohmann::json& doc);

}  // namespace isobenefit::io
