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

#include "slopestc/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support/oracles.hpp"

namespace slopestc {
namespace {

using testing::make_grid;
using testing::make_mega;

TEST(BuildGraphTest, TwoFlatCells) {
  const CoverageGraph g = build_graph(make_mega({{0, 0}}, {}, 2.0), WeightSpec::Pythagoras);
  ASSERT_EQ(g.node_count(), 2u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 2.0}));
}

TEST(BuildGraphTest, NoDiagonalEdges) {
  const CoverageGraph g = build_graph(make_mega({{1, 1}, {1, 1}}, {}, 1.0), WeightSpec::Unit);
  EXPECT_EQ(g.node_count(), 4u);
  ASSERT_EQ(g.edges().size(), 4u);
  // Row-major, right before down.
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 1.0}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2, 1.0}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3, 1.0}));
  EXPECT_EQ(g.edges()[3], (Edge{2, 3, 1.0}));
  EXPECT_EQ(g.edge_between(0, 3), -1);
  EXPECT_EQ(g.edge_between(1, 2), -1);
}

TEST(BuildGraphTest, BlockedCellIsSkipped) {
  // Blocked at (0, 1): remaining cells (0,0), (1,0), (1,1) form an L.
  const CoverageGraph g = build_graph(make_mega({{0, 5}, {0, 0}}, {".#", ".."}, 1.0),
                                      WeightSpec::Pythagoras);
  ASSERT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.nodes()[1], (NodeId{1, 1, 0}));
  EXPECT_EQ(g.nodes()[2], (NodeId{2, 1, 1}));
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].a, 0);
  EXPECT_EQ(g.edges()[0].b, 1);
  EXPECT_EQ(g.edges()[1].a, 1);
  EXPECT_EQ(g.edges()[1].b, 2);
  EXPECT_EQ(g.node_at(0, 1), -1);
  EXPECT_EQ(g.neighbor(0, Direction::Right), -1);
  EXPECT_EQ(g.neighbor(0, Direction::Down), 1);
}

TEST(BuildGraphTest, DisconnectedReportsComponents) {
  const MegaGrid m = make_mega({{0, 0, 0}, {0, 0, 0}}, {".#.", ".#."}, 1.0);
  try {
    build_graph(m, WeightSpec::Unit);
    FAIL() << "expected DisconnectedError";
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.components(), 2u);
    EXPECT_NE(std::string(e.what()).find("2 components"), std::string::npos);
  }
  EXPECT_THROW(build_graph(make_mega({{0}}, {"#"}, 1.0), WeightSpec::Unit), Error);
}

TEST(BuildGraphTest, WeightsFollowSpecAndSpacing) {
  const MegaGrid m = make_mega({{0, 3}, {4, 3}}, {}, 4.0);
  const CoverageGraph g = build_graph(m, WeightSpec::SlopePenalty);
  for (const Edge& e : g.edges()) {
    EXPECT_DOUBLE_EQ(e.weight, weight_penalty(g.height(e.a), g.height(e.b), 4.0));
  }
  EXPECT_DOUBLE_EQ(g.edges()[0].weight, 8.75);  // (0,0)-(0,1): rise 3 over 4
}

TEST(BuildGraphTest, RandomGridProperties) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> h(-5.0, 5.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = 1 + trial % 7;
    const int c = 1 + (trial * 3) % 9;
    MegaGrid m;
    m.heights.resize(r, c);
    for (Eigen::Index i = 0; i < m.heights.size(); ++i) m.heights.data()[i] = h(rng);
    m.blocked = MaskArray::Constant(r, c, false);
    m.spacing = 2.0;
    const CoverageGraph g = build_graph(m, WeightSpec::Unit);
    EXPECT_EQ(static_cast<Eigen::Index>(g.edges().size()), r * (c - 1) + c * (r - 1));
    EXPECT_EQ(count_free_edges(m), r * (c - 1) + c * (r - 1));
    EXPECT_LE(static_cast<Eigen::Index>(g.edges().size()), 2 * r * c);
    std::vector<int> degree(g.node_count(), 0);
    for (const Edge& e : g.edges()) {
      EXPECT_LT(e.a, e.b);
      EXPECT_EQ(e.weight, 1.0);
      const NodeId& a = g.nodes()[e.a];
      const NodeId& b = g.nodes()[e.b];
      EXPECT_EQ(std::abs(a.row - b.row) + std::abs(a.col - b.col), 1);
      ++degree[e.a];
      ++degree[e.b];
    }
    for (int d : degree) EXPECT_LE(d, 4);
  }
}

TEST(AverageSlopeTest, Examples) {
  EXPECT_EQ(average_slope(make_mega({{2, 2}, {2, 2}}, {}, 3.0)), 0.0);
  EXPECT_DOUBLE_EQ(average_slope(make_mega({{0, 1}}, {}, 2.0)), 0.5);
  EXPECT_DOUBLE_EQ(average_slope(make_mega({{3}, {0}}, {}, 4.0)), 0.75);
}

TEST(AverageSlopeTest, FromFineGridWithSpacingTwo) {
  // Fine spacing 2 puts mega centers 4 apart: |0 - 1| / 4.
  const HeightGrid g = make_grid({{0, 0, 1, 1}, {0, 0, 1, 1}}, {}, 2.0);
  EXPECT_DOUBLE_EQ(average_slope(aggregate(g)), 0.25);
}

TEST(AverageSlopeTest, BlockedPairsAreExcluded) {
  // Only (0,0)-(1,0) remains: |1 - 4| / 1.
  EXPECT_DOUBLE_EQ(average_slope(make_mega({{1, 100}, {4, 100}}, {".#", ".#"}, 1.0)), 3.0);
}

TEST(AverageSlopeTest, NeedsAnEdge) {
  EXPECT_THROW(average_slope(make_mega({{1}}, {}, 1.0)), NoEdgesError);
  EXPECT_THROW(average_slope(make_mega({{1, 2}}, {".#"}, 1.0)), NoEdgesError);
}

TEST(AverageSlopeTest, ShiftAndScale) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> h(0.0, 10.0);
  MegaGrid m;
  m.heights.resize(9, 6);
  for (Eigen::Index i = 0; i < m.heights.size(); ++i) m.heights.data()[i] = h(rng);
  m.blocked = MaskArray::Constant(9, 6, false);
  m.blocked(4, 2) = true;
  m.spacing = 1.7;
  const double base = average_slope(m);
  MegaGrid shifted = m;
  shifted.heights += 123.0;
  EXPECT_NEAR(average_slope(shifted), base, 1e-9);
  MegaGrid scaled = m;
  scaled.heights *= 3.0;
  EXPECT_NEAR(average_slope(scaled), 3.0 * base, 1e-9);
}

TEST(EdgeListTest, Format) {
  const CoverageGraph g = build_graph(make_mega({{0, 3}}, {}, 4.0), WeightSpec::Pythagoras);
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "0 0 0 1 5\n");
}

}  // namespace
}  // namespace slopestc
