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

#include "slopestc/terrain.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include "slopestc/graph.hpp"

namespace slopestc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_real(std::string_view token, int line_no) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                     std::string(token) + "'");
  }
  return value;
}

long long parse_int(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(token) + "'");
  }
  return value;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch));
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Counts 4-connected components of cells whose mask value equals `value`.
std::size_t count_components(const MaskArray& mask, bool value) {
  const Eigen::Index rows = mask.rows();
  const Eigen::Index cols = mask.cols();
  std::vector<char> seen(static_cast<std::size_t>(rows * cols), 0);
  std::vector<Eigen::Index> stack;
  std::size_t components = 0;
  constexpr std::array<std::array<int, 2>, 4> kSteps{{{-1, 0}, {0, 1}, {1, 0}, {0, -1}}};
  for (Eigen::Index start = 0; start < rows * cols; ++start) {
    const Eigen::Index sr = start / cols;
    const Eigen::Index sc = start % cols;
    if (mask(sr, sc) != value || seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const Eigen::Index cur = stack.back();
      stack.pop_back();
      const Eigen::Index r = cur / cols;
      const Eigen::Index c = cur % cols;
      for (const auto& [dr, dc] : kSteps) {
        const Eigen::Index nr = r + dr;
        const Eigen::Index nc = c + dc;
        if (nr < 0 || nc < 0 || nr >= rows || nc >= cols) continue;
        const Eigen::Index idx = nr * cols + nc;
        if (mask(nr, nc) != value || seen[idx]) continue;
        seen[idx] = 1;
        stack.push_back(idx);
      }
    }
  }
  return components;
}

// Bit-level conversion so the sequence does not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * unit() - 1.0; }
  // Uniform integer in [lo, hi].
  Eigen::Index between(Eigen::Index lo, Eigen::Index hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<Eigen::Index>(engine_() % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Sum of octaves of bilinearly interpolated lattice noise, roughly in [-2, 2].
ElevationArray<double> fractal_noise(Eigen::Index rows, Eigen::Index cols,
                                     Rng& rng) {
  ElevationArray<double> field = ElevationArray<double>::Zero(rows, cols);
  double period = std::max<double>(4.0, static_cast<double>(std::min(rows, cols)) / 6.0);
  double amplitude = 1.0;
  for (int octave = 0; octave < 5 && period >= 1.0; ++octave) {
    const auto lat_r = static_cast<Eigen::Index>(std::ceil(rows / period)) + 2;
    const auto lat_c = static_cast<Eigen::Index>(std::ceil(cols / period)) + 2;
    Eigen::ArrayXXd lattice(lat_r, lat_c);
    for (Eigen::Index i = 0; i < lat_r; ++i) {
      for (Eigen::Index j = 0; j < lat_c; ++j) lattice(i, j) = rng.symmetric();
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double y = i / period;
      const auto y0 = static_cast<Eigen::Index>(y);
      const double ty = smoothstep(y - y0);
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double x = j / period;
        const auto x0 = static_cast<Eigen::Index>(x);
        const double tx = smoothstep(x - x0);
        const double top = lattice(y0, x0) * (1 - tx) + lattice(y0, x0 + 1) * tx;
        const double bottom =
            lattice(y0 + 1, x0) * (1 - tx) + lattice(y0 + 1, x0 + 1) * tx;
        field(i, j) += amplitude * (top * (1 - ty) + bottom * ty);
      }
    }
    period /= 2.0;
    amplitude /= 2.0;
  }
  return field;
}

MaskArray blocked_of(const MaskArray& obstacle) {
  const Eigen::Index r = obstacle.rows() / 2;
  const Eigen::Index c = obstacle.cols() / 2;
  const auto even = Eigen::seqN(0, r, 2);
  const auto odd = Eigen::seqN(1, r, 2);
  const auto even_c = Eigen::seqN(0, c, 2);
  const auto odd_c = Eigen::seqN(1, c, 2);
  return obstacle(even, even_c) || obstacle(even, odd_c) ||
         obstacle(odd, even_c) || obstacle(odd, odd_c);
}

MaskArray place_obstacles(const TerrainGenSpec& spec, Rng& rng) {
  MaskArray obstacle = MaskArray::Constant(spec.rows, spec.cols, false);
  const Eigen::Index max_side =
      std::max<Eigen::Index>(1, std::min(spec.rows, spec.cols) / 10);
  constexpr int kAttemptsPerObstacle = 64;
  for (int k = 0; k < spec.max_obstacles; ++k) {
    for (int attempt = 0; attempt < kAttemptsPerObstacle; ++attempt) {
      const Eigen::Index h = rng.between(1, max_side);
      const Eigen::Index w = rng.between(1, max_side);
      const Eigen::Index top = rng.between(0, spec.rows - h);
      const Eigen::Index left = rng.between(0, spec.cols - w);
      MaskArray trial = obstacle;
      trial.block(top, left, h, w).setConstant(true);
      const MaskArray blocked = blocked_of(trial);
      if ((!blocked).count() > 0 && free_components(blocked) == 1) {
        obstacle = std::move(trial);
        break;
      }
    }
  }
  return obstacle;
}

}  // namespace

std::size_t free_components(const MaskArray& blocked) {
  return count_components(blocked, false);
}

std::size_t obstacle_regions(const MaskArray& obstacle) {
  return count_components(obstacle, true);
}

HeightGrid read_height_grid(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!is_blank(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty terrain file");
  const auto header = split_ws(line);
  if (header.size() != 3) {
    throw ParseError("line 1: expected 'rows cols spacing'");
  }
  const long long rows = parse_int(header[0], line_no);
  const long long cols = parse_int(header[1], line_no);
  const double spacing = parse_real(header[2], line_no);
  if (rows <= 0 || cols <= 0 || rows % 2 != 0 || cols % 2 != 0) {
    throw DimensionError("rows and cols must be even and positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }

  HeightGrid grid;
  grid.spacing = spacing;
  grid.heights.resize(rows, cols);
  grid.obstacle = MaskArray::Constant(rows, cols, false);
  for (long long i = 0; i < rows; ++i) {
    if (!next_line()) {
      throw DimensionError("expected " + std::to_string(rows) +
                           " height rows, got " + std::to_string(i));
    }
    const auto tokens = split_ws(line);
    if (static_cast<long long>(tokens.size()) != cols) {
      throw DimensionError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(cols) + " heights, got " +
                           std::to_string(tokens.size()));
    }
    for (long long j = 0; j < cols; ++j) {
      grid.heights(i, j) = parse_real(tokens[j], line_no);
    }
  }

  if (next_line()) {
    if (trim(line) != "MASK") {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected MASK or end of file");
    }
    for (long long i = 0; i < rows; ++i) {
      if (!next_line()) throw DimensionError("mask section is truncated");
      const auto row = trim(line);
      if (static_cast<long long>(row.size()) != cols) {
        throw DimensionError("line " + std::to_string(line_no) +
                             ": mask row has wrong length");
      }
      for (long long j = 0; j < cols; ++j) {
        if (row[j] == '#') {
          grid.obstacle(i, j) = true;
        } else if (row[j] != '.') {
          throw ParseError("line " + std::to_string(line_no) +
                           ": mask accepts only '.' and '#'");
        }
      }
    }
    if (next_line()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": trailing content after mask");
    }
  }

  validate(grid);
  return grid;
}

HeightGrid load_height_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open terrain file " + path.string());
  return read_height_grid(in);
}

void write_height_grid(std::ostream& out, const HeightGrid& grid) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", grid.spacing);
  out << grid.rows() << ' ' << grid.cols() << ' ' << buf << '\n';
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    for (Eigen::Index j = 0; j < grid.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.9g", grid.heights(i, j));
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
  if (grid.obstacle.any()) {
    out << "MASK\n";
    for (Eigen::Index i = 0; i < grid.rows(); ++i) {
      for (Eigen::Index j = 0; j < grid.cols(); ++j) {
        out << (grid.obstacle(i, j) ? '#' : '.');
      }
      out << '\n';
    }
  }
}

void save_height_grid(const std::filesystem::path& path,
                      const HeightGrid& grid) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write terrain file " + path.string());
  write_height_grid(out, grid);
  if (!out) throw IoError("write failed for " + path.string());
}

HeightGrid generate_terrain(const TerrainGenSpec& spec) {
  if (spec.rows <= 0 || spec.cols <= 0 || spec.rows % 2 != 0 ||
      spec.cols % 2 != 0) {
    throw DimensionError("generated terrain dimensions must be even");
  }
  if (spec.max_obstacles < 0 || !(spec.roughness >= 0.0) ||
      spec.roughness > 1.0 || !(spec.spacing > 0.0)) {
    throw ValueError("invalid terrain generation parameters");
  }

  Rng rng(spec.seed);
  HeightGrid grid;
  grid.spacing = spec.spacing;
  const ElevationArray<double> raw = fractal_noise(spec.rows, spec.cols, rng);
  grid.obstacle = place_obstacles(spec, rng);

  if (spec.roughness == 0.0) {
    grid.heights = ElevationArray<double>::Zero(spec.rows, spec.cols);
  } else {
    // Slope is linear in the height scale, so one rescale hits the target.
    grid.heights = raw;
    grid.spacing = 0.5;
    const MegaGrid unit_mega = aggregate(grid);
    grid.spacing = spec.spacing;
    const double mega_spacing = 2.0 * spec.spacing;
    double scale = spec.roughness * mega_spacing;
    if (count_free_edges(unit_mega) > 0) {
      const double mean_rise = average_slope(unit_mega);
      if (mean_rise > 0.0) scale = spec.roughness * mega_spacing / mean_rise;
    }
    grid.heights *= scale;
  }

  if (!grid.heights.isFinite().all()) {
    throw GenerationError("height scale overflowed for spacing " +
                          std::to_string(spec.spacing));
  }
  const MegaGrid mega = aggregate(grid);
  if (mega.free_count() == 0 || free_components(mega.blocked) != 1) {
    throw GenerationError("generated terrain has no connected free region");
  }
  return grid;
}

}  // namespace slopestc
