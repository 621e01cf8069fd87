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
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "isobenefit/io.hpp"

namespace isobenefit::io {

namespace {

constexpr double kNoData = -9999.0;

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> nonblank_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    auto line = text.substr(start, end == std::string_view::npos ? end : end - start);
    ++number;
    start = end == std::string_view::npos ? text.size() : end + 1;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (!line.empty()) lines.push_back({number, line});
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line, bool comma) {
  std::vector<std::string_view> out;
  if (comma) {
    std::size_t start = 0;
    while (true) {
      auto pos = line.find(',', start);
      out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return out;
  }
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    std::size_t begin = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > begin) out.push_back(line.substr(begin, k - begin));
  }
  return out;
}

Eigen::Index parse_count(std::string_view text, const std::string& what) {
  const double v = parse_number(text, what);
  if (v < 1 || v != static_cast<double>(static_cast<Eigen::Index>(v))) {
    throw Error(ErrorCode::Parse, what + ": expected a positive integer");
  }
  return static_cast<Eigen::Index>(v);
}

void write_rows(std::ostringstream& os, const Raster& raster, char sep) {
  const auto& v = raster.values();
  for (Eigen::Index row = v.rows() - 1; row >= 0; --row) {
    for (Eigen::Index col = 0; col < v.cols(); ++col) {
      if (col) os << sep;
      os << format_number(v(row, col));
    }
    os << '\n';
  }
}

void read_rows(const std::vector<Line>& lines, std::size_t first, const GridSpec& grid,
               bool comma, const std::string& source, RowMajorArrayXXd& values,
               std::optional<double> nodata) {
  if (lines.size() - first != static_cast<std::size_t>(grid.nrows)) {
    throw Error(ErrorCode::Parse, source + ": expected " + std::to_string(grid.nrows) +
                                      " data rows, got " + std::to_string(lines.size() - first));
  }
  values.resize(grid.nrows, grid.ncols);
  for (Eigen::Index r = 0; r < grid.nrows; ++r) {
    const Line& line = lines[first + static_cast<std::size_t>(r)];
    const std::string where = source + ":" + std::to_string(line.number);
    auto cells = tokens(line.text, comma);
    if (static_cast<Eigen::Index>(cells.size()) != grid.ncols) {
      throw Error(ErrorCode::Parse, where + ": expected " + std::to_string(grid.ncols) +
                                        " values, got " + std::to_string(cells.size()));
    }
    const Eigen::Index row = grid.nrows - 1 - r;
    for (Eigen::Index col = 0; col < grid.ncols; ++col) {
      const double v = parse_number(cells[static_cast<std::size_t>(col)], where);
      if (nodata && v == *nodata) {
        throw Error(ErrorCode::NonFiniteValue, where + ": NODATA cells are not supported");
      }
      values(row, col) = v;
    }
  }
}

}  // namespace

std::string format_raster_csv(const Raster& raster) {
  const auto& g = raster.grid();
  std::ostringstream os;
  os << "# " << g.ncols << ',' << g.nrows << ',' << format_number(g.origin.x()) << ','
     << format_number(g.origin.y()) << ',' << format_number(g.cell_size) << '\n';
  write_rows(os, raster, ',');
  return os.str();
}

Raster parse_raster_csv(std::string_view text, const std::string& source) {
  auto lines = nonblank_lines(text);
  if (lines.empty() || lines[0].text.front() != '#') {
    throw Error(ErrorCode::Parse, source + ":1: expected header '# ncols,nrows,origin_x,origin_y,cell_size'");
  }
  auto header = lines[0].text.substr(1);
  auto fields = tokens(header, true);
  const std::string where = source + ":" + std::to_string(lines[0].number);
  if (fields.size() != 5) {
    throw Error(ErrorCode::Parse, where + ": header needs 5 fields: ncols,nrows,origin_x,origin_y,cell_size");
  }
  GridSpec grid;
  grid.ncols = parse_count(fields[0], where + ": ncols");
  grid.nrows = parse_count(fields[1], where + ": nrows");
  grid.origin = {parse_number(fields[2], where + ": origin_x"),
                 parse_number(fields[3], where + ": origin_y")};
  grid.cell_size = parse_number(fields[4], where + ": cell_size");
  check_grid(grid);
  RowMajorArrayXXd values;
  read_rows(lines, 1, grid, true, source, values, std::nullopt);
  return Raster(grid, values);
}

std::string format_raster_asc(const Raster& raster) {
  const auto& g = raster.grid();
  std::ostringstream os;
  os << "NCOLS " << g.ncols << '\n'
     << "NROWS " << g.nrows << '\n'
     << "XLLCORNER " << format_number(g.origin.x() - 0.5 * g.cell_size) << '\n'
     << "YLLCORNER " << format_number(g.origin.y() - 0.5 * g.cell_size) << '\n'
     << "CELLSIZE " << format_number(g.cell_size) << '\n'
     << "NODATA_VALUE " << format_number(kNoData) << '\n';
  write_rows(os, raster, ' ');
  return os.str();
}

Raster parse_raster_asc(std::string_view text, const std::string& source) {
  auto lines = nonblank_lines(text);
  std::map<std::string, std::string_view> header;
  std::size_t k = 0;
  for (; k < lines.size(); ++k) {
    auto parts = tokens(lines[k].text, false);
    if (parts.size() != 2 || !std::isalpha(static_cast<unsigned char>(parts[0].front()))) break;
    std::string key(parts[0]);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    header[key] = parts[1];
  }
  auto need = [&](const char* key) -> std::string_view {
    auto it = header.find(key);
    if (it == header.end()) throw Error(ErrorCode::Parse, source + ": missing header '" + key + "'");
    return it->second;
  };
  GridSpec grid;
  grid.ncols = parse_count(need("ncols"), source + ": NCOLS");
  grid.nrows = parse_count(need("nrows"), source + ": NROWS");
  grid.cell_size = parse_number(need("cellsize"), source + ": CELLSIZE");
  const double half = 0.5 * grid.cell_size;
  auto corner = [&](const char* corner_key, const char* center_key) {
    if (header.count(center_key)) return parse_number(header[center_key], source + ": " + center_key);
    return parse_number(need(corner_key), source + ": " + corner_key) + half;
  };
  grid.origin = {corner("xllcorner", "xllcenter"), corner("yllcorner", "yllcenter")};
  check_grid(grid);
  std::optional<double> nodata;
  if (header.count("nodata_value")) nodata = parse_number(header["nodata_value"], source + ": NODATA_VALUE");
  RowMajorArrayXXd values;
  read_rows(lines, k, grid, false, source, values, nodata);
  return Raster(grid, values);
}

std::string format_raster(const Raster& raster, RasterFormat format) {
  return format == RasterFormat::Asc ? format_raster_asc(raster) : format_raster_csv(raster);
}

Raster read_raster(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".asc" ? parse_raster_asc(text, path.string())
                       : parse_raster_csv(text, path.string());
}

}  // namespace isobenefit::io
