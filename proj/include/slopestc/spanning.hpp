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

#include <vector>

#include "slopestc/graph.hpp"

namespace slopestc {

/// Spanning tree over a CoverageGraph. Edge weights are those of the graph
/// the tree was built from; `root` is always node 0.
struct SpanningTree {
  std::vector<Edge> edges;
  int root = 0;
};

/// Kruskal over edges sorted by (weight, canonical edge index).
SpanningTree minimum_spanning_tree(const CoverageGraph& graph);

/// Weight-blind baseline: depth-first tree from the root, visiting
/// neighbours up, right, down, left.
SpanningTree classical_spanning_tree(const CoverageGraph& graph);

/// Sum of edge_weight(spec, ...) over the tree edges, using the graph's mega
/// heights and spacing. `spec` may differ from the spec the graph was built
/// with.
double tree_weight(const CoverageGraph& graph, const SpanningTree& tree,
                   WeightSpec spec);

/// Same as above with the graph's own spec.
double tree_weight(const CoverageGraph& graph, const SpanningTree& tree);

/// True when `tree` has node_count - 1 graph edges and connects every node.
bool is_spanning_tree(const CoverageGraph& graph, const SpanningTree& tree);

}  // namespace slopestc
