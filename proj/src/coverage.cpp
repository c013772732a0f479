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

#include "slopestc/coverage.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "slopestc/weights.hpp"

namespace slopestc {
namespace {

// Sub-cells of a mega cell in clockwise order.
enum Quadrant : int { kTopLeft = 0, kTopRight = 1, kBottomRight = 2, kBottomLeft = 3 };

FineCell fine_cell(const NodeId& node, int quadrant) {
  const int dr = (quadrant == kBottomRight || quadrant == kBottomLeft) ? 1 : 0;
  const int dc = (quadrant == kTopRight || quadrant == kBottomRight) ? 1 : 0;
  return {2 * node.row + dr, 2 * node.col + dc};
}

std::uint8_t bit(Direction dir) { return std::uint8_t(1u << static_cast<int>(dir)); }

}  // namespace

CoveragePath circumnavigate(const CoverageGraph& graph, const SpanningTree& tree) {
  const std::size_t n = graph.node_count();
  CoveragePath path;
  if (n == 0) return path;

  std::vector<std::uint8_t> links(n, 0);
  for (const Edge& e : tree.edges) {
    for (Direction dir : kDirections) {
      if (graph.neighbor(e.a, dir) == e.b) {
        links[e.a] |= bit(dir);
        links[e.b] |= bit(opposite(dir));
      }
    }
  }

  // Leaving quadrant q heads Up, Right, Down, Left for q = 0..3. With a tree
  // edge on that side the walk enters the neighbour's quadrant q - 1;
  // otherwise it turns clockwise inside the same mega cell.
  path.cells.reserve(4 * n);
  int node = tree.root;
  int quadrant = kTopLeft;
  do {
    path.cells.push_back(fine_cell(graph.nodes()[node], quadrant));
    const auto side = static_cast<Direction>(quadrant);
    if (links[node] & bit(side)) {
      node = graph.neighbor(node, side);
      quadrant = (quadrant + 3) % 4;
    } else {
      quadrant = (quadrant + 1) % 4;
    }
  } while ((node != tree.root || quadrant != kTopLeft) && path.cells.size() <= 4 * n);
  return path;
}

double path_cost(const CoveragePath& path, const HeightGrid& grid,
                 WeightSpec spec) {
  const std::size_t len = path.cells.size();
  if (len < 2) return 0.0;
  double total = 0.0;
  const std::size_t steps = path.closed ? len : len - 1;
  for (std::size_t i = 0; i < steps; ++i) {
    const FineCell& a = path.cells[i];
    const FineCell& b = path.cells[(i + 1) % len];
    total += edge_weight(spec, grid.heights(a.row, a.col),
                         grid.heights(b.row, b.col), grid.spacing);
  }
  return total;
}

void check_path(const CoveragePath& path, const HeightGrid& grid) {
  const MegaGrid mega = aggregate(grid);
  const Eigen::Index expected = 4 * mega.free_count();
  if (static_cast<Eigen::Index>(path.size()) != expected) {
    throw MismatchError("path has " + std::to_string(path.size()) +
                        " cells, terrain needs " + std::to_string(expected));
  }
  MaskArray seen = MaskArray::Constant(grid.rows(), grid.cols(), false);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const FineCell& c = path.cells[i];
    const std::string where =
        "cell " + std::to_string(i) + " (" + std::to_string(c.row) + "," +
        std::to_string(c.col) + ")";
    if (c.row < 0 || c.col < 0 || c.row >= grid.rows() || c.col >= grid.cols()) {
      throw MismatchError(where + " is outside the " +
                          std::to_string(grid.rows()) + "x" +
                          std::to_string(grid.cols()) + " terrain");
    }
    if (grid.obstacle(c.row, c.col) || mega.blocked(c.row / 2, c.col / 2)) {
      throw MismatchError(where + " is blocked");
    }
    if (seen(c.row, c.col)) throw MismatchError(where + " is visited twice");
    seen(c.row, c.col) = true;
    if (i + 1 < path.size() || path.closed) {
      const FineCell& next = path.cells[(i + 1) % path.size()];
      if (std::abs(next.row - c.row) + std::abs(next.col - c.col) != 1) {
        throw MismatchError(where + " is not 4-adjacent to its successor");
      }
    }
  }
}

void write_path(std::ostream& out, const CoveragePath& path) {
  out << "PATH " << path.size() << (path.closed ? " closed" : " open") << '\n';
  for (const FineCell& c : path.cells) out << c.row << ' ' << c.col << '\n';
}

void save_path(const std::filesystem::path& file, const CoveragePath& path) {
  std::ofstream out(file);
  if (!out) throw IoError("cannot write path file " + file.string());
  write_path(out, path);
  if (!out) throw IoError("write failed for " + file.string());
}

CoveragePath read_path(std::istream& in) {
  std::string tag;
  std::string kind;
  long long length = -1;
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty path file");
  std::istringstream hs(header);
  if (!(hs >> tag >> length >> kind) || tag != "PATH" || length < 0 ||
      (kind != "closed" && kind != "open")) {
    throw ParseError("path header must be 'PATH <length> closed'");
  }
  CoveragePath path;
  path.closed = kind == "closed";
  path.cells.reserve(static_cast<std::size_t>(length));
  for (long long i = 0; i < length; ++i) {
    FineCell c;
    if (!(in >> c.row >> c.col)) {
      throw ParseError("path file ends after " + std::to_string(i) + " of " +
                       std::to_string(length) + " cells");
    }
    path.cells.push_back(c);
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing content in path file");
  return path;
}

CoveragePath load_path(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open path file " + file.string());
  return read_path(in);
}

}  // namespace slopestc
