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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "slopestc/terrain.hpp"
#include "slopestc/weights.hpp"

namespace slopestc {

/// A free mega cell. `index` is its rank in row-major order with blocked
/// cells skipped.
struct NodeId {
  int index = 0;
  int row = 0;
  int col = 0;

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Undirected edge between 4-adjacent free mega cells, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Neighbour directions in the canonical order used for traversals.
enum class Direction : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

inline constexpr std::array<Direction, 4> kDirections{
    Direction::Up, Direction::Right, Direction::Down, Direction::Left};

inline constexpr int row_step(Direction dir) {
  return dir == Direction::Up ? -1 : dir == Direction::Down ? 1 : 0;
}
inline constexpr int col_step(Direction dir) {
  return dir == Direction::Left ? -1 : dir == Direction::Right ? 1 : 0;
}
inline constexpr Direction opposite(Direction dir) {
  return static_cast<Direction>((static_cast<int>(dir) + 2) % 4);
}

/// Weighted 4-connected graph over the free cells of a MegaGrid.
///
/// Edges are listed row-major; for each node the edge to its right neighbour
/// precedes the edge to the neighbour below. That order is the tie-break key
/// for the tree builders.
class CoverageGraph {
 public:
  const MegaGrid& mega() const { return mega_; }
  WeightSpec spec() const { return spec_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Node index of mega cell (row, col), or -1 when blocked/out of range.
  int node_at(Eigen::Index row, Eigen::Index col) const;

  /// Node index of the neighbour in `dir`, or -1.
  int neighbor(int node, Direction dir) const;

  /// Index into edges() of the edge joining a and b, or -1.
  int edge_between(int a, int b) const;

  double height(int node) const {
    return mega_.heights(nodes_[node].row, nodes_[node].col);
  }

 private:
  friend CoverageGraph build_graph(const MegaGrid& mega, WeightSpec spec);

  MegaGrid mega_;
  WeightSpec spec_ = WeightSpec::Unit;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  // Per node: index of the edge to the right neighbour, then to the one below.
  std::vector<std::array<int, 2>> forward_edges_;
  Eigen::Array<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> index_;
};

/// Throws DisconnectedError when the free cells form more than one
/// component, Error when there are none.
CoverageGraph build_graph(const MegaGrid& mega, WeightSpec spec);

/// Number of 4-adjacent free pairs.
template <typename Scalar>
Eigen::Index count_free_edges(const BasicMegaGrid<Scalar>& mega) {
  const Eigen::Index r = mega.rows();
  const Eigen::Index c = mega.cols();
  Eigen::Index count = 0;
  if (c > 1) {
    count += (!mega.blocked.leftCols(c - 1) && !mega.blocked.rightCols(c - 1))
                 .count();
  }
  if (r > 1) {
    count += (!mega.blocked.topRows(r - 1) && !mega.blocked.bottomRows(r - 1))
                 .count();
  }
  return count;
}

/// Mean of |h_a - h_b| / d over all 4-adjacent free pairs of the mega grid.
/// Throws NoEdgesError when there is no such pair.
template <typename Scalar>
Scalar average_slope(const BasicMegaGrid<Scalar>& mega) {
  const Eigen::Index r = mega.rows();
  const Eigen::Index c = mega.cols();
  Scalar rise = Scalar(0);
  Eigen::Index count = 0;
  if (c > 1) {
    const auto free = !mega.blocked.leftCols(c - 1) && !mega.blocked.rightCols(c - 1);
    rise += free.select((mega.heights.leftCols(c - 1) -
                         mega.heights.rightCols(c - 1)).abs(),
                        Scalar(0))
                .sum();
    count += free.count();
  }
  if (r > 1) {
    const auto free = !mega.blocked.topRows(r - 1) && !mega.blocked.bottomRows(r - 1);
    rise += free.select((mega.heights.topRows(r - 1) -
                         mega.heights.bottomRows(r - 1)).abs(),
                        Scalar(0))
                .sum();
    count += free.count();
  }
  if (count == 0) {
    throw NoEdgesError("average slope needs at least two adjacent free cells");
  }
  return rise / mega.spacing / static_cast<Scalar>(count);
}

/// Debug dump, one edge per line: `a_row a_col b_row b_col weight`.
void write_edge_list(std::ostream& out, const CoverageGraph& graph);

}  // namespace slopestc
