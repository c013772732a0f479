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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "slopestc/terrain.hpp"
#include "slopestc/weights.hpp"

namespace slopestc {

/// Experiment set-up: one random terrain per (seed, roughness) pair, each
/// evaluated under every weight spec with both tree builders.
struct BenchConfig {
  int terrain_count = 15;
  Eigen::Index rows = 250;
  Eigen::Index cols = 250;
  int max_obstacles = 30;
  double spacing = 1.0;
  std::vector<std::uint64_t> seeds;
  std::vector<WeightSpec> weight_specs{WeightSpec::Pythagoras,
                                       WeightSpec::SlopePenalty};
  std::vector<double> roughness_schedule;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Config with per-terrain seeds derived from `master_seed` and a roughness
  /// schedule spaced evenly over [0.05, 0.5].
  static BenchConfig with_master_seed(int terrain_count, std::uint64_t master_seed);

  /// Throws ValueError / DimensionError when the invariants do not hold.
  void validate() const;
};

/// Seed of terrain `index` under a master seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t master_seed, int index);

/// `count` values evenly spaced over [lo, hi]; a single value is `lo`.
std::vector<double> linear_schedule(int count, double lo, double hi);

struct BenchRecord {
  int terrain_index = 0;
  std::uint64_t seed = 0;
  double avg_slope = 0.0;
  WeightSpec spec = WeightSpec::Pythagoras;
  double classical_weight = 0.0;
  double mst_weight = 0.0;
  double gap = 0.0;
  double gap_ratio = 1.0;
};

/// Runs every terrain (in parallel when threads != 1). Records come back
/// ordered by (spec position in the config, avg_slope, terrain_index),
/// independent of scheduling. Errors carry the failing terrain index.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

struct SpecSummary {
  WeightSpec spec = WeightSpec::Pythagoras;
  std::size_t records = 0;
  double spearman = 0.0;  // avg_slope vs gap
  double mean_gap = 0.0;
  double mean_gap_ratio = 1.0;
};

/// Per-spec Spearman rank correlation between avg_slope and gap, plus means,
/// in order of first appearance. Throws InsufficientDataError when a spec has
/// fewer than 3 records.
std::vector<SpecSummary> trend_statistics(const std::vector<BenchRecord>& records);

/// Spearman rank correlation with average ranks for ties; 0 when either side
/// is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// CSV with header
/// `terrain,seed,avg_slope,spec,classical_weight,mst_weight,gap,gap_ratio`,
/// six decimals, followed by `#` summary lines.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

using KeyValues = std::map<std::string, std::string>;

/// Reads a flat `key = value` file; '#' starts a comment. Throws ValueError
/// on a line without '='.
KeyValues read_key_values(std::istream& in);

/// Builds a config from keys: terrains, rows, cols, obstacles, spacing,
/// seed (master), seeds (comma list), specs (comma list), roughness (comma
/// list), roughness_min, roughness_max, threads. Missing keys take the
/// defaults of BenchConfig::with_master_seed(15, 42). Unknown keys and bad
/// values throw ValueError.
BenchConfig make_bench_config(const KeyValues& values);

BenchConfig parse_bench_config(std::istream& in);

}  // namespace slopestc
