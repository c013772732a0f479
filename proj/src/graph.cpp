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

#include <cstdio>
#include <ostream>
#include <utility>

namespace slopestc {

int CoverageGraph::node_at(Eigen::Index row, Eigen::Index col) const {
  if (row < 0 || col < 0 || row >= index_.rows() || col >= index_.cols()) {
    return -1;
  }
  return index_(row, col);
}

int CoverageGraph::neighbor(int node, Direction dir) const {
  const NodeId& n = nodes_[node];
  return node_at(n.row + row_step(dir), n.col + col_step(dir));
}

int CoverageGraph::edge_between(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (a < 0 || static_cast<std::size_t>(b) >= nodes_.size()) return -1;
  const NodeId& na = nodes_[a];
  const NodeId& nb = nodes_[b];
  if (na.row == nb.row && nb.col == na.col + 1) return forward_edges_[a][0];
  if (na.col == nb.col && nb.row == na.row + 1) return forward_edges_[a][1];
  return -1;
}

CoverageGraph build_graph(const MegaGrid& mega, WeightSpec spec) {
  if (mega.free_count() == 0) {
    throw Error("mega grid has no free cells");
  }
  const std::size_t components = free_components(mega.blocked);
  if (components != 1) throw DisconnectedError(components);

  CoverageGraph g;
  g.mega_ = mega;
  g.spec_ = spec;
  g.index_.setConstant(mega.rows(), mega.cols(), -1);
  g.nodes_.reserve(static_cast<std::size_t>(mega.free_count()));
  for (Eigen::Index i = 0; i < mega.rows(); ++i) {
    for (Eigen::Index j = 0; j < mega.cols(); ++j) {
      if (mega.blocked(i, j)) continue;
      const int id = static_cast<int>(g.nodes_.size());
      g.index_(i, j) = id;
      g.nodes_.push_back({id, static_cast<int>(i), static_cast<int>(j)});
    }
  }

  const double d = mega.spacing;
  g.forward_edges_.assign(g.nodes_.size(), {-1, -1});
  for (const NodeId& n : g.nodes_) {
    for (int k = 0; k < 2; ++k) {
      const int other = g.neighbor(n.index, k == 0 ? Direction::Right : Direction::Down);
      if (other < 0) continue;
      g.forward_edges_[n.index][k] = static_cast<int>(g.edges_.size());
      g.edges_.push_back(
          {n.index, other,
           edge_weight(spec, mega.heights(n.row, n.col),
                       mega.heights(g.nodes_[other].row, g.nodes_[other].col), d)});
    }
  }
  return g;
}

void write_edge_list(std::ostream& out, const CoverageGraph& graph) {
  char buf[32];
  for (const Edge& e : graph.edges()) {
    const NodeId& a = graph.nodes()[e.a];
    const NodeId& b = graph.nodes()[e.b];
    std::snprintf(buf, sizeof buf, "%.9g", e.weight);
    out << a.row << ' ' << a.col << ' ' << b.row << ' ' << b.col << ' ' << buf
        << '\n';
  }
}

}  // namespace slopestc
