// Copyright 2026 The slopestc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "slopestc/errors.hpp"

namespace slopestc {

template <typename Scalar>
using ElevationArray =
    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MaskArray =
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Fine elevation grid. One cell is one tool footprint; `spacing` is the
/// horizontal distance between neighbouring cell centers.
///
/// Invariants (enforced by validate()): even, positive dimensions; mask and
/// heights share a shape; finite heights; positive finite spacing.
template <typename Scalar>
struct BasicHeightGrid {
  ElevationArray<Scalar> heights;
  MaskArray obstacle;
  Scalar spacing = Scalar(1);

  Eigen::Index rows() const { return heights.rows(); }
  Eigen::Index cols() const { return heights.cols(); }
};

/// 2x2-aggregated grid. Its cells are the coverage-graph nodes.
template <typename Scalar>
struct BasicMegaGrid {
  ElevationArray<Scalar> heights;
  MaskArray blocked;
  Scalar spacing = Scalar(2);

  Eigen::Index rows() const { return heights.rows(); }
  Eigen::Index cols() const { return heights.cols(); }
  Eigen::Index free_count() const { return (!blocked).count(); }
};

using HeightGrid = BasicHeightGrid<double>;
using MegaGrid = BasicMegaGrid<double>;

template <typename Scalar>
void validate(const BasicHeightGrid<Scalar>& grid) {
  const auto r = grid.rows();
  const auto c = grid.cols();
  if (r <= 0 || c <= 0 || r % 2 != 0 || c % 2 != 0) {
    throw DimensionError("grid dimensions must be even and positive, got " +
                         std::to_string(r) + "x" + std::to_string(c));
  }
  if (grid.obstacle.rows() != r || grid.obstacle.cols() != c) {
    throw DimensionError("obstacle mask shape differs from height shape");
  }
  if (!grid.heights.isFinite().all()) {
    throw ValueError("grid contains a non-finite height");
  }
  using std::isfinite;
  if (!(grid.spacing > Scalar(0)) || !isfinite(grid.spacing)) {
    throw ValueError("spacing must be positive and finite");
  }
}

/// Mean of each 2x2 block; a block is blocked when any of its cells is an
/// obstacle. Spacing doubles.
template <typename Scalar>
BasicMegaGrid<Scalar> aggregate(const BasicHeightGrid<Scalar>& grid) {
  const Eigen::Index r = grid.rows() / 2;
  const Eigen::Index c = grid.cols() / 2;
  const auto even = Eigen::seqN(0, r, 2);
  const auto odd = Eigen::seqN(1, r, 2);
  const auto even_c = Eigen::seqN(0, c, 2);
  const auto odd_c = Eigen::seqN(1, c, 2);

  BasicMegaGrid<Scalar> mega;
  mega.heights = (grid.heights(even, even_c) + grid.heights(even, odd_c) +
                  grid.heights(odd, even_c) + grid.heights(odd, odd_c)) /
                 Scalar(4);
  mega.blocked = grid.obstacle(even, even_c) || grid.obstacle(even, odd_c) ||
                 grid.obstacle(odd, even_c) || grid.obstacle(odd, odd_c);
  mega.spacing = Scalar(2) * grid.spacing;
  return mega;
}

/// Non-obstacle fine cells that lie inside blocked mega cells; they cannot be
/// covered.
template <typename Scalar>
Eigen::Index sacrificed_cells(const BasicHeightGrid<Scalar>& grid) {
  const auto mega = aggregate(grid);
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    for (Eigen::Index j = 0; j < grid.cols(); ++j) {
      if (!grid.obstacle(i, j) && mega.blocked(i / 2, j / 2)) ++count;
    }
  }
  return count;
}

struct TerrainGenSpec {
  Eigen::Index rows = 250;
  Eigen::Index cols = 250;
  std::uint64_t seed = 0;
  int max_obstacles = 0;
  // Target average mega-grid slope, in [0, 1].
  double roughness = 0.0;
  double spacing = 1.0;
};

// Throws ParseError / DimensionError / ValueError / IoError.
HeightGrid load_height_grid(const std::filesystem::path& path);
HeightGrid read_height_grid(std::istream& in);

// Heights and spacing are written with 9 significant digits.
void write_height_grid(std::ostream& out, const HeightGrid& grid);
void save_height_grid(const std::filesystem::path& path,
                      const HeightGrid& grid);

/// Seeded random terrain: fractal value noise rescaled so that the average
/// mega-grid slope over free edges equals `roughness`, then up to
/// `max_obstacles` rectangular obstacles, each kept only if the free mega
/// graph stays connected.
///
/// Throws GenerationError if the result cannot satisfy the grid invariants
/// (for example when the height scale overflows).
HeightGrid generate_terrain(const TerrainGenSpec& spec);

/// Number of 4-connected components of free mega cells.
std::size_t free_components(const MaskArray& blocked);

/// Number of 4-connected components of obstacle fine cells.
std::size_t obstacle_regions(const MaskArray& obstacle);

}  // namespace slopestc
