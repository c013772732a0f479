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

#include "slopestc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <utility>

namespace slopestc {
namespace {

constexpr const char* kObstacleFill = "#ff0000";
constexpr const char* kRouteStroke = "#1f77b4";
constexpr const char* kTreeStroke = "#2ca02c";

std::string grey(double level) {
  const int v = static_cast<int>(std::lround(std::clamp(level, 0.0, 1.0) * 255.0));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", v, v, v);
  return buf;
}

}  // namespace

void render_svg(std::ostream& out, const HeightGrid& grid, const CoveragePath& path,
                const RenderOptions& options) {
  check_path(path, grid);

  const Eigen::Index rows = grid.rows();
  const Eigen::Index cols = grid.cols();
  const int px = options.cell_px > 0
                     ? options.cell_px
                     : static_cast<int>(std::clamp<Eigen::Index>(
                           800 / std::max(rows, cols), 2, 24));
  const double lo = grid.heights.minCoeff();
  const double hi = grid.heights.maxCoeff();
  const double span = hi - lo;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * px
      << "\" height=\"" << rows * px << "\" viewBox=\"0 0 " << cols * px << ' '
      << rows * px << "\">\n";
  out << "<g class=\"terrain\" shape-rendering=\"crispEdges\">\n";
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const bool blocked = grid.obstacle(i, j);
      const std::string fill =
          blocked ? kObstacleFill
                  : grey(span > 0.0 ? (grid.heights(i, j) - lo) / span : 0.5);
      out << "<rect class=\"" << (blocked ? "cell obstacle" : "cell") << "\" x=\""
          << j * px << "\" y=\"" << i * px << "\" width=\"" << px
          << "\" height=\"" << px << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  out << "</g>\n";

  const double half = px / 2.0;
  if (options.show_tree && path.size() > 1) {
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> tree;
    const std::size_t steps = path.closed ? path.size() : path.size() - 1;
    for (std::size_t k = 0; k < steps; ++k) {
      const FineCell& a = path.cells[k];
      const FineCell& b = path.cells[(k + 1) % path.size()];
      std::pair<int, int> ma{a.row / 2, a.col / 2};
      std::pair<int, int> mb{b.row / 2, b.col / 2};
      if (ma == mb) continue;
      if (mb < ma) std::swap(ma, mb);
      tree.emplace(ma, mb);
    }
    out << "<g class=\"tree\" stroke=\"" << kTreeStroke
        << "\" stroke-width=\"" << std::max(1, px / 3) << "\">\n";
    for (const auto& [ma, mb] : tree) {
      out << "<line x1=\"" << ma.second * 2 * px + px << "\" y1=\""
          << ma.first * 2 * px + px << "\" x2=\"" << mb.second * 2 * px + px
          << "\" y2=\"" << mb.first * 2 * px + px << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<polyline class=\"route\" fill=\"none\" stroke=\"" << kRouteStroke
      << "\" stroke-width=\"" << std::max(1.0, px / 4.0) << "\" points=\"";
  auto put_point = [&](const FineCell& c) {
    out << c.col * px + half << ',' << c.row * px + half;
  };
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0) out << ' ';
    put_point(path.cells[k]);
  }
  if (path.closed && !path.cells.empty()) {
    out << ' ';
    put_point(path.cells.front());
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace slopestc
