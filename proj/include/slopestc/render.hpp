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

#include <iosfwd>

#include "slopestc/coverage.hpp"
#include "slopestc/terrain.hpp"

namespace slopestc {

struct RenderOptions {
  // Overlay the spanning tree recovered from the mega-cell crossings of the
  // path.
  bool show_tree = false;
  // Pixel size of one fine cell; 0 picks a size that keeps the image near
  // 800 px.
  int cell_px = 0;
};

/// SVG of the terrain and route. Fine cells are shaded linearly in grey from
/// the lowest (black) to the highest (white) elevation, obstacles are solid
/// red, and the route is one polyline through cell centers that repeats the
/// first point when the path is closed.
///
/// The path is checked against the terrain first (MismatchError).
void render_svg(std::ostream& out, const HeightGrid& grid, const CoveragePath& path,
                const RenderOptions& options = {});

}  // namespace slopestc
