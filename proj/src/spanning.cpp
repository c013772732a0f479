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

#include "slopestc/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace slopestc {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace

SpanningTree minimum_spanning_tree(const CoverageGraph& graph) {
  const auto& edges = graph.edges();
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return edges[x].weight < edges[y].weight;
  });

  SpanningTree tree;
  const std::size_t n = graph.node_count();
  tree.edges.reserve(n > 0 ? n - 1 : 0);
  DisjointSets sets(n);
  for (std::size_t idx : order) {
    if (tree.edges.size() + 1 >= n) break;
    const Edge& e = edges[idx];
    if (sets.unite(e.a, e.b)) tree.edges.push_back(e);
  }
  return tree;
}

SpanningTree classical_spanning_tree(const CoverageGraph& graph) {
  const std::size_t n = graph.node_count();
  SpanningTree tree;
  if (n == 0) return tree;
  tree.edges.reserve(n - 1);

  // Edge weights are only looked up after the traversal, so the tree shape
  // never depends on them.
  std::vector<std::pair<int, int>> links;
  links.reserve(n - 1);
  std::vector<char> visited(n, 0);
  // (node, next direction to try)
  std::vector<std::pair<int, int>> stack;
  visited[0] = 1;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == 4) {
      stack.pop_back();
      continue;
    }
    const int other = graph.neighbor(node, kDirections[next++]);
    if (other < 0 || visited[other]) continue;
    visited[other] = 1;
    links.emplace_back(node, other);
    stack.emplace_back(other, 0);
  }

  for (auto [u, v] : links) {
    tree.edges.push_back(graph.edges()[graph.edge_between(u, v)]);
  }
  return tree;
}

double tree_weight(const CoverageGraph& graph, const SpanningTree& tree,
                   WeightSpec spec) {
  const double d = graph.mega().spacing;
  double total = 0.0;
  for (const Edge& e : tree.edges) {
    total += edge_weight(spec, graph.height(e.a), graph.height(e.b), d);
  }
  return total;
}

double tree_weight(const CoverageGraph& graph, const SpanningTree& tree) {
  return tree_weight(graph, tree, graph.spec());
}

bool is_spanning_tree(const CoverageGraph& graph, const SpanningTree& tree) {
  const std::size_t n = graph.node_count();
  if (tree.edges.size() + 1 != n) return false;
  DisjointSets sets(n);
  for (const Edge& e : tree.edges) {
    if (e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.b) >= n) return false;
    const bool present = graph.edge_between(e.a, e.b) >= 0;
    if (!present || !sets.unite(e.a, e.b)) return false;
  }
  return true;
}

}  // namespace slopestc
