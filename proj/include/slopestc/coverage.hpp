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

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "slopestc/spanning.hpp"
#include "slopestc/terrain.hpp"

namespace slopestc {

/// A cell of the original (fine) height grid.
struct FineCell {
  int row = 0;
  int col = 0;

  friend bool operator==(const FineCell&, const FineCell&) = default;
};

/// Closed coverage cycle over fine cells.
struct CoveragePath {
  std::vector<FineCell> cells;
  bool closed = true;
  // Free fine cells left uncovered because their mega cell is blocked.
  Eigen::Index sacrificed = 0;

  std::size_t size() const { return cells.size(); }
};

/// Spanning-tree coverage cycle: starting at the top-left sub-cell of the
/// root mega cell, walk clockwise around every mega cell, crossing into a
/// neighbour only along a tree edge. Each free mega cell contributes its four
/// sub-cells exactly once.
CoveragePath circumnavigate(const CoverageGraph& graph, const SpanningTree& tree);

/// Sum of edge_weight over consecutive cells (including last to first) using
/// fine heights and fine spacing.
double path_cost(const CoveragePath& path, const HeightGrid& grid,
                 WeightSpec spec);

/// Checks the path against the terrain: in bounds, obstacle free, inside free
/// mega cells, 4-adjacent steps (cyclically when closed), no repeats.
/// Throws MismatchError describing the first violation.
void check_path(const CoveragePath& path, const HeightGrid& grid);

// Text format: `PATH <length> closed` then one `row col` line per cell.
void write_path(std::ostream& out, const CoveragePath& path);
void save_path(const std::filesystem::path& file, const CoveragePath& path);
CoveragePath read_path(std::istream& in);
CoveragePath load_path(const std::filesystem::path& file);

}  // namespace slopestc
