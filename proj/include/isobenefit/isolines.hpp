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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "isobenefit/raster.hpp"

namespace isobenefit {

template <typename Scalar>
struct BasicContourLine {
  Scalar level = Scalar(0);
  // Closed lines do not repeat their first vertex at the end.
  std::vector<Point2<Scalar>> points;
  bool closed = false;
};

template <typename Scalar>
struct BasicContourSet {
  std::vector<Scalar> levels;
  std::vector<BasicContourLine<Scalar>> lines;
  std::vector<std::string> warnings;
};

/// Request N levels equally spaced strictly between the raster min and max:
/// min + k (max - min) / (N + 1), k = 1..N.
struct LevelCount {
  int count = 1;
};

template <typename Scalar>
using LevelSpec = std::variant<std::vector<Scalar>, LevelCount>;

template <typename Scalar>
std::vector<Scalar> equally_spaced_levels(const BasicRaster<Scalar>& raster, int count) {
  using std::isfinite;
  if (count < 1) throw Error(ErrorCode::InvalidLevel, "level count must be >= 1");
  const Scalar lo = raster.values().minCoeff();
  const Scalar hi = raster.values().maxCoeff();
  if (!(hi > lo) || !isfinite(hi - lo)) {
    throw Error(ErrorCode::NoFiniteRange,
                "raster has no finite value range to space levels over");
  }
  std::vector<Scalar> levels;
  levels.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    levels.push_back(lo + (hi - lo) * static_cast<Scalar>(k) / static_cast<Scalar>(count + 1));
  }
  return levels;
}

namespace detail {

// Contouring lattice: raster cell centres are the corners. Crossing points live
// on lattice edges, identified as 2*(row*ncols + col) for the edge leaving
// node (col,row) eastward and that plus one for the edge leaving it northward.
template <typename Scalar>
class LevelTracer {
 public:
  LevelTracer(const BasicRaster<Scalar>& raster, Scalar level)
      : raster_(raster), grid_(raster.grid()), level_(level) {}

  std::vector<BasicContourLine<Scalar>> trace() {
    collect_segments();
    return chain();
  }

 private:
  using EdgeId = std::int64_t;
  static constexpr EdgeId kNone = -1;

  struct Node {
    EdgeId id;
    std::array<EdgeId, 2> next{kNone, kNone};
    int degree = 0;
    bool visited = false;
  };

  EdgeId east(Eigen::Index col, Eigen::Index row) const { return 2 * (row * grid_.ncols + col); }
  EdgeId north(Eigen::Index col, Eigen::Index row) const { return east(col, row) + 1; }

  bool above(Eigen::Index col, Eigen::Index row) const { return raster_(col, row) > level_; }

  void add_segment(EdgeId a, EdgeId b) { segments_.push_back({a, b}); }

  void collect_segments() {
    for (Eigen::Index j = 0; j + 1 < grid_.nrows; ++j) {
      for (Eigen::Index i = 0; i + 1 < grid_.ncols; ++i) {
        const int code = (above(i, j) ? 1 : 0) | (above(i + 1, j) ? 2 : 0) |
                         (above(i + 1, j + 1) ? 4 : 0) | (above(i, j + 1) ? 8 : 0);
        const EdgeId b = east(i, j);        // bottom
        const EdgeId r = north(i + 1, j);   // right
        const EdgeId t = east(i, j + 1);    // top
        const EdgeId l = north(i, j);       // left
        switch (code) {
          case 0: case 15: break;
          case 1: case 14: add_segment(l, b); break;
          case 2: case 13: add_segment(b, r); break;
          case 3: case 12: add_segment(l, r); break;
          case 4: case 11: add_segment(r, t); break;
          case 6: case 9: add_segment(b, t); break;
          case 7: case 8: add_segment(l, t); break;
          case 5:
          case 10: {
            const Scalar centre = Scalar(0.25) * (raster_(i, j) + raster_(i + 1, j) +
                                                  raster_(i + 1, j + 1) + raster_(i, j + 1));
            // Ties go to the topology where the above-level corners stay apart.
            const bool joined = centre > level_;
            const bool cut_bl_tr = (code == 5) != joined;
            if (cut_bl_tr) {
              add_segment(l, b);
              add_segment(r, t);
            } else {
              add_segment(b, r);
              add_segment(t, l);
            }
            break;
          }
          default: break;
        }
      }
    }
  }

  Point2<Scalar> crossing(EdgeId id) const {
    const EdgeId node = id / 2;
    const Eigen::Index col = node % grid_.ncols;
    const Eigen::Index row = node / grid_.ncols;
    const bool is_north = (id % 2) != 0;
    const Eigen::Index col2 = is_north ? col : col + 1;
    const Eigen::Index row2 = is_north ? row + 1 : row;
    const Scalar v0 = raster_(col, row);
    const Scalar v1 = raster_(col2, row2);
    const Point2<Scalar> p0 = grid_.cell_center(col, row);
    const Point2<Scalar> p1 = grid_.cell_center(col2, row2);
    const Scalar t = (level_ - v0) / (v1 - v0);
    Point2<Scalar> p = p0 + t * (p1 - p0);
    p = p.cwiseMax(p0.cwiseMin(p1)).cwiseMin(p0.cwiseMax(p1));
    return p;
  }

  std::vector<BasicContourLine<Scalar>> chain() {
    std::vector<EdgeId> ids;
    ids.reserve(segments_.size() * 2);
    for (const auto& [a, b] : segments_) {
      ids.push_back(a);
      ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    nodes_.clear();
    nodes_.reserve(ids.size());
    for (EdgeId id : ids) nodes_.push_back(Node{id});
    auto index_of = [&](EdgeId id) {
      return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (const auto& [a, b] : segments_) {
      Node& na = nodes_[index_of(a)];
      Node& nb = nodes_[index_of(b)];
      na.next[static_cast<std::size_t>(na.degree++)] = static_cast<EdgeId>(index_of(b));
      nb.next[static_cast<std::size_t>(nb.degree++)] = static_cast<EdgeId>(index_of(a));
    }

    std::vector<BasicContourLine<Scalar>> lines;
    // Open lines start and end on the lattice boundary (degree-1 nodes).
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!nodes_[k].visited && nodes_[k].degree == 1) lines.push_back(walk(k, false));
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!nodes_[k].visited) lines.push_back(walk(k, true));
    }
    return lines;
  }

  BasicContourLine<Scalar> walk(std::size_t start, bool closed) {
    BasicContourLine<Scalar> line;
    line.level = level_;
    line.closed = closed;
    std::size_t current = start;
    while (true) {
      Node& node = nodes_[current];
      node.visited = true;
      line.points.push_back(crossing(node.id));
      EdgeId step = kNone;
      for (int k = 0; k < node.degree; ++k) {
        const auto candidate = node.next[static_cast<std::size_t>(k)];
        if (!nodes_[static_cast<std::size_t>(candidate)].visited) {
          step = candidate;
          break;
        }
      }
      if (step == kNone) break;
      current = static_cast<std::size_t>(step);
    }
    return line;
  }

  const BasicRaster<Scalar>& raster_;
  const BasicGridSpec<Scalar>& grid_;
  Scalar level_;
  std::vector<std::pair<EdgeId, EdgeId>> segments_;
  std::vector<Node> nodes_;
};

}  // namespace detail

/// Isobenefit lines of `raster` by marching squares with linear interpolation
/// along lattice edges. A cell corner counts as inside when its value is
/// strictly above the level. Saddle cells are resolved by comparing the
/// average of the four corners with the level.
template <typename Scalar>
BasicContourSet<Scalar> extract_isolines(const BasicRaster<Scalar>& raster,
                                         const LevelSpec<Scalar>& spec) {
  using std::isfinite;
  const auto& grid = raster.grid();
  if (grid.ncols < 2 || grid.nrows < 2) {
    throw Error(ErrorCode::GridTooSmall, "contouring needs a raster of at least 2x2 cells");
  }
  BasicContourSet<Scalar> out;
  if (const auto* count = std::get_if<LevelCount>(&spec)) {
    out.levels = equally_spaced_levels(raster, count->count);
  } else {
    out.levels = std::get<std::vector<Scalar>>(spec);
  }
  for (Scalar level : out.levels) {
    if (!isfinite(level)) throw Error(ErrorCode::InvalidLevel, "contour levels must be finite");
  }

  const Scalar lo = raster.values().minCoeff();
  const Scalar hi = raster.values().maxCoeff();
  for (Scalar level : out.levels) {
    if (lo == hi && level == lo) {
      out.warnings.push_back("level " + std::to_string(static_cast<double>(level)) +
                             " equals the constant raster value; a plateau has no line");
      continue;
    }
    auto lines = detail::LevelTracer<Scalar>(raster, level).trace();
    for (auto& line : lines) out.lines.push_back(std::move(line));
  }
  return out;
}

using ContourLine = BasicContourLine<double>;
using ContourSet = BasicContourSet<double>;

}  // namespace isobenefit
