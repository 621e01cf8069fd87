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

#include <algorithm>
#include <cctype>
#include <vector>

#include "isobenefit/io.hpp"

namespace isobenefit::io {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::Parse, where + ": missing field '" + key + "'");
  if (!it->is_number()) throw Error(ErrorCode::Parse, where + ": field '" + key + "' must be a number");
  return it->get<double>();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scene parse_scene_json(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, source + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, source + ": top level must be an object");

  Scene scene;
  auto amenities = doc.find("amenities");
  if (amenities == doc.end() || !amenities->is_array()) {
    throw Error(ErrorCode::Parse, source + ": missing 'amenities' array");
  }
  for (std::size_t k = 0; k < amenities->size(); ++k) {
    const auto& item = (*amenities)[k];
    const std::string where = source + ": amenities[" + std::to_string(k) + "]";
    if (!item.is_object()) throw Error(ErrorCode::Parse, where + ": must be an object");
    auto id = item.find("id");
    if (id == item.end() || !id->is_string()) {
      throw Error(ErrorCode::Parse, where + ": missing string field 'id'");
    }
    Amenity a;
    a.id = id->get<std::string>();
    a.position = {number_field(item, "x", where), number_field(item, "y", where)};
    a.attractiveness = number_field(item, "A", where);
    scene.amenities.push_back(std::move(a));
  }

  if (auto profiles = doc.find("profiles"); profiles != doc.end() && !profiles->is_null()) {
    if (!profiles->is_object()) throw Error(ErrorCode::Parse, source + ": 'profiles' must be an object");
    for (const auto& [name, body] : profiles->items()) {
      const std::string where = source + ": profiles." + name;
      if (!body.is_object()) throw Error(ErrorCode::Parse, where + ": must be an object");
      Profile p;
      p.name = name;
      if (auto e = body.find("E"); e != body.end() && !e->is_null()) {
        if (!e->is_number()) throw Error(ErrorCode::Parse, where + ": 'E' must be a number");
        p.efficiency = e->get<double>();
      }
      if (auto o = body.find("overrides"); o != body.end() && !o->is_null()) {
        if (!o->is_object()) throw Error(ErrorCode::Parse, where + ": 'overrides' must be an object");
        for (const auto& [id, value] : o->items()) {
          if (!value.is_number()) {
            throw Error(ErrorCode::Parse, where + ".overrides." + id + ": must be a number");
          }
          p.overrides[id] = value.get<double>();
        }
      }
      scene.profiles.emplace(name, std::move(p));
    }
  }

  if (auto majority = doc.find("majority"); majority != doc.end() && !majority->is_null()) {
    if (!majority->is_string()) throw Error(ErrorCode::Parse, source + ": 'majority' must be a string");
    scene.majority = majority->get<std::string>();
  }
  return scene;
}

Scene parse_scene_csv(std::string_view text, const std::string& source) {
  Scene scene;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? end : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);

    auto cols = split(line, ',');
    if (!header_seen) {
      std::vector<std::string_view> names;
      for (auto c : cols) names.push_back(trim(c));
      if (names != std::vector<std::string_view>{"id", "x", "y", "A"}) {
        throw Error(ErrorCode::Parse, where + ": expected header 'id,x,y,A'");
      }
      header_seen = true;
      continue;
    }
    if (cols.size() != 4) {
      throw Error(ErrorCode::Parse, where + ": expected 4 columns, got " + std::to_string(cols.size()));
    }
    Amenity a;
    a.id = std::string(trim(cols[0]));
    a.position = {parse_number(cols[1], where + ": x"), parse_number(cols[2], where + ": y")};
    a.attractiveness = parse_number(cols[3], where + ": A");
    scene.amenities.push_back(std::move(a));
  }
  if (!header_seen) throw Error(ErrorCode::Parse, source + ": empty amenity CSV");
  return scene;
}

nlohmann::json scene_to_json(const Scene& scene) {
  json doc;
  doc["amenities"] = json::array();
  for (const auto& a : scene.amenities) {
    doc["amenities"].push_back(
        {{"id", a.id}, {"x", a.position.x()}, {"y", a.position.y()}, {"A", a.attractiveness}});
  }
  if (!scene.profiles.empty()) {
    json profiles = json::object();
    for (const auto& [name, p] : scene.profiles) {
      json body = json::object();
      if (p.efficiency) body["E"] = *p.efficiency;
      body["overrides"] = json::object();
      for (const auto& [id, value] : p.overrides) body["overrides"][id] = value;
      profiles[name] = body;
    }
    doc["profiles"] = profiles;
  }
  if (scene.majority) doc["majority"] = *scene.majority;
  return doc;
}

Scene read_scene(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  Scene scene = ext == ".csv" ? parse_scene_csv(text, path.string())
                              : parse_scene_json(text, path.string());
  auto report = validate_scene(scene);
  if (!report.ok()) {
    throw Error(report.violations.front().code, path.string() + ": " + report.to_string());
  }
  return scene;
}

}  // namespace isobenefit::io
