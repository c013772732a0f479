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

// Independent reference computations for tests. Nothing here calls the
// library's tree builders, traversal or flood fill.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "slopestc/coverage.hpp"
#include "slopestc/graph.hpp"
#include "slopestc/terrain.hpp"

namespace slopestc::testing {

struct PlainEdge {
  int a;
  int b;
  double w;
};

// True when the n-1 chosen edges connect all n nodes (BFS reachability).
inline bool connects_all(int n, const std::vector<PlainEdge>& chosen) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : chosen) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

// Minimum total weight over every spanning tree, by enumerating all
// (n-1)-subsets of the edges. Returns +inf if no spanning tree exists.
inline double brute_force_min_tree_weight(int n, const std::vector<PlainEdge>& edges) {
  if (n <= 1) return 0.0;
  const int m = static_cast<int>(edges.size());
  const int k = n - 1;
  if (m < k) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  std::vector<char> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::vector<PlainEdge> chosen;
  do {
    chosen.clear();
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      if (pick[i]) {
        chosen.push_back(edges[i]);
        total += edges[i].w;
      }
    }
    if (connects_all(n, chosen)) best = std::min(best, total);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

// Free mega cells and their 4-adjacent pairs, computed directly from the
// mask, with node ids in row-major order.
struct PlainGraph {
  int nodes = 0;
  std::vector<PlainEdge> edges;
};

template <typename WeightFn>
PlainGraph plain_graph(const MegaGrid& mega, WeightFn weight) {
  PlainGraph g;
  std::vector<int> id(mega.rows() * mega.cols(), -1);
  for (Eigen::Index i = 0; i < mega.rows(); ++i) {
    for (Eigen::Index j = 0; j < mega.cols(); ++j) {
      if (!mega.blocked(i, j)) id[i * mega.cols() + j] = g.nodes++;
    }
  }
  for (Eigen::Index i = 0; i < mega.rows(); ++i) {
    for (Eigen::Index j = 0; j < mega.cols(); ++j) {
      const int u = id[i * mega.cols() + j];
      if (u < 0) continue;
      if (j + 1 < mega.cols() && id[i * mega.cols() + j + 1] >= 0) {
        g.edges.push_back({u, id[i * mega.cols() + j + 1],
                           weight(mega.heights(i, j), mega.heights(i, j + 1))});
      }
      if (i + 1 < mega.rows() && id[(i + 1) * mega.cols() + j] >= 0) {
        g.edges.push_back({u, id[(i + 1) * mega.cols() + j],
                           weight(mega.heights(i, j), mega.heights(i + 1, j))});
      }
    }
  }
  return g;
}

// Free-region count by BFS over the mask (false = free).
inline int flood_fill_regions(const MaskArray& blocked) {
  const auto rows = blocked.rows();
  const auto cols = blocked.cols();
  std::vector<char> seen(rows * cols, 0);
  int regions = 0;
  for (Eigen::Index s = 0; s < rows * cols; ++s) {
    if (blocked(s / cols, s % cols) || seen[s]) continue;
    ++regions;
    std::queue<Eigen::Index> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const auto cur = q.front();
      q.pop();
      const Eigen::Index r = cur / cols;
      const Eigen::Index c = cur % cols;
      const Eigen::Index nbr[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
      for (const auto& rc : nbr) {
        if (rc[0] < 0 || rc[1] < 0 || rc[0] >= rows || rc[1] >= cols) continue;
        const auto idx = rc[0] * cols + rc[1];
        if (blocked(rc[0], rc[1]) || seen[idx]) continue;
        seen[idx] = 1;
        q.push(idx);
      }
    }
  }
  return regions;
}

// Full check of a coverage cycle against its terrain. Returns an empty string
// when every invariant holds, else the first violation.
inline std::string coverage_violation(const CoveragePath& path, const HeightGrid& grid,
                                      const SpanningTree* tree = nullptr,
                                      const CoverageGraph* graph = nullptr) {
  const auto rows = grid.rows();
  const auto cols = grid.cols();
  // Blocked mega cells recomputed from the fine mask.
  auto mega_blocked = [&](int fr, int fc) {
    const int r0 = fr / 2 * 2;
    const int c0 = fc / 2 * 2;
    return grid.obstacle(r0, c0) || grid.obstacle(r0 + 1, c0) ||
           grid.obstacle(r0, c0 + 1) || grid.obstacle(r0 + 1, c0 + 1);
  };
  int free_megas = 0;
  for (int i = 0; i < rows; i += 2) {
    for (int j = 0; j < cols; j += 2) free_megas += mega_blocked(i, j) ? 0 : 1;
  }
  if (!path.closed) return "path is not closed";
  if (static_cast<int>(path.size()) != 4 * free_megas) {
    return "length " + std::to_string(path.size()) + " != 4 x " + std::to_string(free_megas);
  }
  std::vector<int> visits(rows * cols, 0);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto& c = path.cells[k];
    if (c.row < 0 || c.col < 0 || c.row >= rows || c.col >= cols) return "out of bounds";
    if (grid.obstacle(c.row, c.col)) return "visits an obstacle";
    if (mega_blocked(c.row, c.col)) return "visits a blocked mega cell";
    ++visits[c.row * cols + c.col];
    const auto& n = path.cells[(k + 1) % path.size()];
    if (std::abs(n.row - c.row) + std::abs(n.col - c.col) != 1) {
      return "step " + std::to_string(k) + " is not 4-adjacent";
    }
    if (tree && graph) {
      const int ma = graph->node_at(c.row / 2, c.col / 2);
      const int mb = graph->node_at(n.row / 2, n.col / 2);
      if (ma != mb) {
        const bool on_tree = std::any_of(tree->edges.begin(), tree->edges.end(),
                                         [&](const Edge& e) {
                                           return (e.a == ma && e.b == mb) ||
                                                  (e.a == mb && e.b == ma);
                                         });
        if (!on_tree) return "crosses between mega cells off the tree";
      }
    }
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int expected = mega_blocked(i, j) ? 0 : 1;
      if (visits[i * cols + j] != expected) {
        return "cell (" + std::to_string(i) + "," + std::to_string(j) + ") visited " +
               std::to_string(visits[i * cols + j]) + " times";
      }
    }
  }
  return {};
}

inline MegaGrid make_mega(const std::vector<std::vector<double>>& heights,
                          const std::vector<std::string>& mask, double spacing) {
  MegaGrid m;
  const auto r = static_cast<Eigen::Index>(heights.size());
  const auto c = static_cast<Eigen::Index>(heights.front().size());
  m.heights.resize(r, c);
  m.blocked = MaskArray::Constant(r, c, false);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      m.heights(i, j) = heights[i][j];
      if (!mask.empty()) m.blocked(i, j) = mask[i][j] == '#';
    }
  }
  m.spacing = spacing;
  return m;
}

inline HeightGrid make_grid(const std::vector<std::vector<double>>& heights,
                            const std::vector<std::string>& mask, double spacing) {
  HeightGrid g;
  const auto r = static_cast<Eigen::Index>(heights.size());
  const auto c = static_cast<Eigen::Index>(heights.front().size());
  g.heights.resize(r, c);
  g.obstacle = MaskArray::Constant(r, c, false);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      g.heights(i, j) = heights[i][j];
      if (!mask.empty()) g.obstacle(i, j) = mask[i][j] == '#';
    }
  }
  g.spacing = spacing;
  return g;
}

// Random connected mega grid with at most `max_nodes` free cells.
inline MegaGrid random_small_mega(std::mt19937_64& rng, int max_nodes) {
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_real_distribution<double> height(-3.0, 3.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> spacing(0.5, 3.0);
  while (true) {
    MegaGrid m;
    const int r = dim(rng);
    const int c = dim(rng) + (r == 1 ? 1 : 0);
    m.heights.resize(r, c);
    m.blocked = MaskArray::Constant(r, c, false);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        // Round some heights so equal-weight ties occur.
        const double h = height(rng);
        m.heights(i, j) = coin(rng) < 0.3 ? std::round(h) : h;
        m.blocked(i, j) = coin(rng) < 0.2;
      }
    }
    m.spacing = spacing(rng);
    const auto free = (!m.blocked).count();
    if (free >= 1 && free <= max_nodes && flood_fill_regions(m.blocked) == 1) return m;
  }
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("slopestc_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace slopestc::testing
