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

#include "slopestc/bench.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>
#include <thread>

#include "slopestc/graph.hpp"
#include "slopestc/spanning.hpp"

namespace slopestc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  text = trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValueError("bad value for '" + std::string(key) + "': '" +
                     std::string(text) + "'");
  }
  return value;
}

BenchRecord make_record(int index, std::uint64_t seed, double avg_slope,
                        WeightSpec spec, double classical, double mst) {
  BenchRecord r;
  r.terrain_index = index;
  r.seed = seed;
  r.avg_slope = avg_slope;
  r.spec = spec;
  r.classical_weight = classical;
  r.mst_weight = mst;
  r.gap = classical - mst;
  r.gap_ratio = mst > 0.0 ? classical / mst : 1.0;
  return r;
}

std::vector<BenchRecord> run_terrain(const BenchConfig& cfg, int index) {
  TerrainGenSpec gen;
  gen.rows = cfg.rows;
  gen.cols = cfg.cols;
  gen.seed = cfg.seeds[index];
  gen.max_obstacles = cfg.max_obstacles;
  gen.roughness = cfg.roughness_schedule[index];
  gen.spacing = cfg.spacing;

  const HeightGrid grid = generate_terrain(gen);
  const MegaGrid mega = aggregate(grid);
  const double slope = count_free_edges(mega) > 0 ? average_slope(mega) : 0.0;

  std::vector<BenchRecord> out;
  out.reserve(cfg.weight_specs.size());
  for (WeightSpec spec : cfg.weight_specs) {
    const CoverageGraph graph = build_graph(mega, spec);
    const SpanningTree classical = classical_spanning_tree(graph);
    const SpanningTree mst = minimum_spanning_tree(graph);
    out.push_back(make_record(index, gen.seed, slope, spec,
                              tree_weight(graph, classical, spec),
                              tree_weight(graph, mst, spec)));
  }
  return out;
}

Eigen::ArrayXd average_ranks(const std::vector<double>& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  std::vector<Eigen::Index> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return values[a] < values[b]; });
  Eigen::ArrayXd ranks(n);
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (Eigen::Index k = i; k <= j; ++k) ranks(order[k]) = rank;
    i = j + 1;
  }
  return ranks;
}

void put_fixed(std::ostream& out, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  out << buf;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, int index) {
  std::uint64_t x = master_seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> linear_schedule(int count, double lo, double hi) {
  std::vector<double> out;
  if (count <= 0) return out;
  if (count == 1) return {lo};
  const Eigen::ArrayXd values = Eigen::ArrayXd::LinSpaced(count, lo, hi);
  out.assign(values.data(), values.data() + values.size());
  return out;
}

BenchConfig BenchConfig::with_master_seed(int terrain_count, std::uint64_t master_seed) {
  BenchConfig cfg;
  cfg.terrain_count = terrain_count;
  for (int i = 0; i < terrain_count; ++i) cfg.seeds.push_back(derive_seed(master_seed, i));
  cfg.roughness_schedule = linear_schedule(terrain_count, 0.05, 0.5);
  return cfg;
}

void BenchConfig::validate() const {
  if (terrain_count <= 0) throw ValueError("terrain count must be positive");
  if (static_cast<std::size_t>(terrain_count) != seeds.size() ||
      static_cast<std::size_t>(terrain_count) != roughness_schedule.size()) {
    throw ValueError("terrain count, seed count and roughness schedule length differ");
  }
  if (rows <= 0 || cols <= 0 || rows % 2 != 0 || cols % 2 != 0) {
    throw DimensionError("rows and cols must be even and positive");
  }
  if (max_obstacles < 0) throw ValueError("obstacle count must be non-negative");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw ValueError("spacing must be positive and finite");
  }
  if (weight_specs.empty()) throw ValueError("at least one weight spec is required");
  for (double r : roughness_schedule) {
    if (!(r >= 0.0 && r <= 1.0)) throw ValueError("roughness must lie in [0, 1]");
  }
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  const int n = cfg.terrain_count;
  std::vector<std::vector<BenchRecord>> per_terrain(n);
  std::vector<std::exception_ptr> failures(n);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        per_terrain[i] = run_terrain(cfg, i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (int i = 0; i < n; ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      throw GenerationError("terrain " + std::to_string(i) + ": " + e.what());
    }
  }

  std::vector<BenchRecord> records;
  for (auto& batch : per_terrain) records.insert(records.end(), batch.begin(), batch.end());
  auto spec_rank = [&](WeightSpec s) {
    return std::find(cfg.weight_specs.begin(), cfg.weight_specs.end(), s) -
           cfg.weight_specs.begin();
  };
  std::stable_sort(records.begin(), records.end(),
                   [&](const BenchRecord& a, const BenchRecord& b) {
                     const auto ra = spec_rank(a.spec);
                     const auto rb = spec_rank(b.spec);
                     if (ra != rb) return ra < rb;
                     if (a.avg_slope != b.avg_slope) return a.avg_slope < b.avg_slope;
                     return a.terrain_index < b.terrain_index;
                   });
  return records;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InsufficientDataError("rank correlation needs two equal-length samples");
  }
  const Eigen::ArrayXd rx = average_ranks(x);
  const Eigen::ArrayXd ry = average_ranks(y);
  const Eigen::ArrayXd cx = rx - rx.mean();
  const Eigen::ArrayXd cy = ry - ry.mean();
  const double sxx = cx.square().sum();
  const double syy = cy.square().sum();
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return (cx * cy).sum() / std::sqrt(sxx * syy);
}

std::vector<SpecSummary> trend_statistics(const std::vector<BenchRecord>& records) {
  std::vector<WeightSpec> specs;
  for (const auto& r : records) {
    if (std::find(specs.begin(), specs.end(), r.spec) == specs.end()) specs.push_back(r.spec);
  }
  if (specs.empty()) throw InsufficientDataError("no benchmark records");

  std::vector<SpecSummary> out;
  for (WeightSpec spec : specs) {
    std::vector<double> slope;
    std::vector<double> gap;
    double ratio_sum = 0.0;
    for (const auto& r : records) {
      if (r.spec != spec) continue;
      slope.push_back(r.avg_slope);
      gap.push_back(r.gap);
      ratio_sum += r.gap_ratio;
    }
    if (slope.size() < 3) {
      throw InsufficientDataError("spec '" + std::string(to_string(spec)) +
                                  "' has fewer than 3 records");
    }
    SpecSummary s;
    s.spec = spec;
    s.records = slope.size();
    s.spearman = spearman(slope, gap);
    s.mean_gap = std::accumulate(gap.begin(), gap.end(), 0.0) / gap.size();
    s.mean_gap_ratio = ratio_sum / slope.size();
    out.push_back(s);
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "terrain,seed,avg_slope,spec,classical_weight,mst_weight,gap,gap_ratio\n";
  for (const auto& r : records) {
    out << r.terrain_index << ',' << r.seed << ',';
    put_fixed(out, r.avg_slope);
    out << ',' << to_string(r.spec) << ',';
    put_fixed(out, r.classical_weight);
    out << ',';
    put_fixed(out, r.mst_weight);
    out << ',';
    put_fixed(out, r.gap);
    out << ',';
    put_fixed(out, r.gap_ratio);
    out << '\n';
  }
  out << "# classical_tree,dfs-up-right-down-left\n";
  std::vector<BenchRecord> subset;
  for (WeightSpec spec : {WeightSpec::Unit, WeightSpec::Pythagoras, WeightSpec::SlopePenalty}) {
    subset.clear();
    std::copy_if(records.begin(), records.end(), std::back_inserter(subset),
                 [&](const BenchRecord& r) { return r.spec == spec; });
    if (subset.size() < 3) continue;
    const SpecSummary s = trend_statistics(subset).front();
    out << "# correlation," << to_string(spec) << ',';
    put_fixed(out, s.spearman);
    out << "\n# mean_gap_ratio," << to_string(spec) << ',';
    put_fixed(out, s.mean_gap_ratio);
    out << '\n';
  }
}

KeyValues read_key_values(std::istream& in) {
  KeyValues values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValueError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    values[std::string(trim(view.substr(0, eq)))] = std::string(trim(view.substr(eq + 1)));
  }
  return values;
}

BenchConfig make_bench_config(const KeyValues& values) {
  static const std::vector<std::string_view> kKnown{
      "terrains", "rows", "cols", "obstacles", "spacing", "seed", "seeds",
      "specs", "roughness", "roughness_min", "roughness_max", "threads"};
  for (const auto& [key, _] : values) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ValueError("unknown config key '" + key + "'");
    }
  }
  auto get = [&](const char* key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  BenchConfig cfg;
  cfg.terrain_count = 15;
  if (const auto* v = get("terrains")) cfg.terrain_count = parse_number<int>("terrains", *v);
  if (cfg.terrain_count <= 0) throw ValueError("terrains must be positive");
  if (const auto* v = get("rows")) cfg.rows = parse_number<long long>("rows", *v);
  if (const auto* v = get("cols")) cfg.cols = parse_number<long long>("cols", *v);
  if (const auto* v = get("obstacles")) cfg.max_obstacles = parse_number<int>("obstacles", *v);
  if (const auto* v = get("spacing")) cfg.spacing = parse_number<double>("spacing", *v);
  if (const auto* v = get("threads")) cfg.threads = parse_number<unsigned>("threads", *v);

  if (const auto* v = get("seeds")) {
    for (auto item : split_list(*v)) cfg.seeds.push_back(parse_number<std::uint64_t>("seeds", item));
  } else {
    std::uint64_t master = 42;
    if (const auto* s = get("seed")) master = parse_number<std::uint64_t>("seed", *s);
    for (int i = 0; i < cfg.terrain_count; ++i) cfg.seeds.push_back(derive_seed(master, i));
  }

  if (const auto* v = get("specs")) {
    cfg.weight_specs.clear();
    for (auto item : split_list(*v)) {
      const auto spec = parse_weight_spec(item);
      if (!spec) throw ValueError("unknown weight spec '" + std::string(item) + "'");
      cfg.weight_specs.push_back(*spec);
    }
  }

  if (const auto* v = get("roughness")) {
    for (auto item : split_list(*v)) cfg.roughness_schedule.push_back(parse_number<double>("roughness", item));
  } else {
    double lo = 0.05;
    double hi = 0.5;
    if (const auto* s = get("roughness_min")) lo = parse_number<double>("roughness_min", *s);
    if (const auto* s = get("roughness_max")) hi = parse_number<double>("roughness_max", *s);
    cfg.roughness_schedule = linear_schedule(cfg.terrain_count, lo, hi);
  }

  cfg.validate();
  return cfg;
}

BenchConfig parse_bench_config(std::istream& in) {
  return make_bench_config(read_key_values(in));
}

}  // namespace slopestc
