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

#include "slopestc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "slopestc/bench.hpp"
#include "slopestc/coverage.hpp"
#include "slopestc/graph.hpp"
#include "slopestc/render.hpp"
#include "slopestc/spanning.hpp"
#include "slopestc/terrain.hpp"
#include "slopestc/weights.hpp"

namespace slopestc::cli {
namespace {

namespace fs = std::filesystem;

// Signals an exit code together with a diagnostic.
struct Failure {
  int code;
  std::string message;
};

void require_readable(const std::string& path, const char* what) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Failure{kIo, std::string(what) + " '" + path + "' is not a readable file"};
  }
}

void require_writable(const std::string& path) {
  const fs::path parent = fs::absolute(fs::path(path)).parent_path();
  std::error_code ec;
  if (!fs::is_directory(parent, ec)) {
    throw Failure{kIo, "output directory '" + parent.string() + "' does not exist"};
  }
  if (fs::is_directory(path, ec)) {
    throw Failure{kIo, "output path '" + path + "' is a directory"};
  }
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

// --- gen-terrain ------------------------------------------------------------

struct GenArgs {
  long long rows = 250;
  long long cols = 250;
  std::uint64_t seed = 0;
  int obstacles = 0;
  double roughness = 0.3;
  double spacing = 1.0;
  std::string output;
};

int gen_terrain(const GenArgs& a, std::ostream& err) {
  if (a.rows <= 0 || a.cols <= 0 || a.rows % 2 != 0 || a.cols % 2 != 0) {
    throw Failure{kUsage, "--rows and --cols must be even positive integers "
                          "(terrain is aggregated in 2x2 mega cells)"};
  }
  if (a.obstacles < 0) throw Failure{kUsage, "--obstacles must be non-negative"};
  if (!(a.roughness >= 0.0 && a.roughness <= 1.0)) {
    throw Failure{kUsage, "--roughness must lie in [0, 1]"};
  }
  if (!(a.spacing > 0.0) || !std::isfinite(a.spacing)) {
    throw Failure{kUsage, "--spacing must be positive and finite"};
  }
  require_writable(a.output);

  TerrainGenSpec spec;
  spec.rows = a.rows;
  spec.cols = a.cols;
  spec.seed = a.seed;
  spec.max_obstacles = a.obstacles;
  spec.roughness = a.roughness;
  spec.spacing = a.spacing;
  HeightGrid grid;
  try {
    grid = generate_terrain(spec);
  } catch (const Error& e) {
    throw Failure{kGeneration, std::string("terrain generation failed: ") + e.what()};
  }
  save_height_grid(a.output, grid);
  err << "wrote " << a.rows << "x" << a.cols << " terrain to " << a.output << '\n';
  return kOk;
}

// --- plan -------------------------------------------------------------------

struct PlanArgs {
  std::string terrain;
  std::string weight = "pythagoras";
  std::string method = "mst";
  std::string output;
  std::string dump_graph;
};

int plan(const PlanArgs& a, std::ostream& out, std::ostream& err) {
  require_readable(a.terrain, "terrain file");
  require_writable(a.output);
  if (!a.dump_graph.empty()) require_writable(a.dump_graph);
  const WeightSpec spec = *parse_weight_spec(a.weight);

  const HeightGrid grid = load_height_grid(a.terrain);
  const MegaGrid mega = aggregate(grid);
  const CoverageGraph graph = build_graph(mega, spec);
  const SpanningTree tree =
      a.method == "mst" ? minimum_spanning_tree(graph) : classical_spanning_tree(graph);
  CoveragePath path = circumnavigate(graph, tree);
  path.sacrificed = sacrificed_cells(grid);
  save_path(a.output, path);

  if (!a.dump_graph.empty()) {
    std::ofstream dump(a.dump_graph);
    write_edge_list(dump, graph);
    if (!dump) throw IoError("cannot write graph dump " + a.dump_graph);
  }

  const double slope = count_free_edges(mega) > 0
                           ? average_slope(mega)
                           : std::numeric_limits<double>::quiet_NaN();
  out << "avg_slope=" << (std::isnan(slope) ? std::string("nan") : fixed6(slope)) << '\n';
  out << "tree_weight=" << fixed6(tree_weight(graph, tree, spec)) << '\n';
  out << "path_length=" << path.size() << '\n';
  out << "path_cost=" << fixed6(path_cost(path, grid, spec)) << '\n';
  out << "free_mega_cells=" << graph.node_count() << '\n';
  out << "sacrificed_cells=" << path.sacrificed << '\n';
  err << "planned " << a.method << " route of " << path.size() << " cells\n";
  return kOk;
}

// --- bench ------------------------------------------------------------------

int bench(CLI::App& sub, const std::string& config_file, const std::string& output,
          std::ostream& out, std::ostream& err) {
  KeyValues values;
  if (!config_file.empty()) {
    require_readable(config_file, "config file");
    std::ifstream in(config_file);
    if (!in) throw Failure{kIo, "cannot open config file " + config_file};
    try {
      values = read_key_values(in);
    } catch (const ValueError& e) {
      throw Failure{kUsage, e.what()};
    }
  }
  // Flags given on the command line override the config file.
  static const std::map<std::string, std::string> kFlagKeys{
      {"--terrains", "terrains"},   {"--rows", "rows"},
      {"--cols", "cols"},           {"--obstacles", "obstacles"},
      {"--seed", "seed"},           {"--spacing", "spacing"},
      {"--specs", "specs"},         {"--roughness-min", "roughness_min"},
      {"--roughness-max", "roughness_max"}, {"--threads", "threads"}};
  for (const auto& [flag, key] : kFlagKeys) {
    const CLI::Option* opt = sub.get_option(flag);
    if (opt->count() > 0) values[key] = opt->as<std::string>();
  }

  BenchConfig cfg;
  try {
    cfg = make_bench_config(values);
  } catch (const Error& e) {
    throw Failure{kUsage, std::string("invalid benchmark configuration: ") + e.what()};
  }
  if (!output.empty()) require_writable(output);

  std::vector<BenchRecord> records;
  try {
    records = run_benchmark(cfg);
  } catch (const Error& e) {
    throw Failure{kGeneration, e.what()};
  }

  if (output.empty()) {
    write_bench_csv(out, records);
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw Failure{kIo, "cannot write " + output};
    write_bench_csv(file, records);
    if (!file) throw Failure{kIo, "write failed for " + output};
    err << "wrote " << records.size() << " records to " << output << '\n';
  }
  return kOk;
}

// --- render -----------------------------------------------------------------

struct RenderArgs {
  std::string terrain;
  std::string path;
  std::string output;
  bool show_tree = false;
  int cell_px = 0;
};

int render(const RenderArgs& a, std::ostream& err) {
  require_readable(a.terrain, "terrain file");
  require_readable(a.path, "path file");
  require_writable(a.output);
  const HeightGrid grid = load_height_grid(a.terrain);
  const CoveragePath path = load_path(a.path);

  std::ostringstream svg;
  RenderOptions options;
  options.show_tree = a.show_tree;
  options.cell_px = a.cell_px;
  render_svg(svg, grid, path, options);

  std::ofstream file(a.output, std::ios::binary);
  if (!file) throw Failure{kIo, "cannot write " + a.output};
  file << svg.str();
  if (!file) throw Failure{kIo, "write failed for " + a.output};
  err << "wrote " << a.output << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slope-aware spanning-tree coverage planner"};
  app.name("slopestc");
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 2 invalid flags, 3 I/O or file format error, "
      "4 terrain generation failure, 5 disconnected terrain, "
      "6 path/terrain mismatch.");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-terrain", "Generate a seeded random terrain file");
  gen_cmd->add_option("--rows", gen.rows, "Fine rows (even)")->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols, "Fine columns (even)")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--obstacles", gen.obstacles, "Maximum number of obstacle rectangles")
      ->capture_default_str();
  gen_cmd->add_option("--roughness", gen.roughness,
                      "Target average mega-cell slope in [0, 1]; 0 gives flat terrain")
      ->capture_default_str();
  gen_cmd->add_option("--spacing", gen.spacing, "Distance between fine cell centers")
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Terrain file to write")->required();

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a closed coverage route over a terrain");
  plan_cmd->add_option("-i,--terrain", plan_args.terrain, "Terrain file")->required();
  plan_cmd->add_option("--weight", plan_args.weight, "Edge weight: unit, pythagoras, penalty")
      ->check(CLI::IsMember({"unit", "pythagoras", "penalty"}))
      ->capture_default_str();
  plan_cmd->add_option("--method", plan_args.method,
                       "Tree builder: mst (minimum spanning tree) or classical (weight-blind DFS)")
      ->check(CLI::IsMember({"mst", "classical"}))
      ->capture_default_str();
  plan_cmd->add_option("-o,--output", plan_args.output, "Path file to write")->required();
  plan_cmd->add_option("--dump-graph", plan_args.dump_graph,
                       "Also write the weighted edge list to this file");

  std::string bench_config;
  std::string bench_output;
  auto* bench_cmd = app.add_subcommand("bench", "Compare MST and classical tree weights on random terrains");
  bench_cmd->add_option("--config", bench_config, "Flat 'key = value' config file");
  bench_cmd->add_option("--terrains", "Number of terrains (default 15)");
  bench_cmd->add_option("--rows", "Fine rows per terrain (default 250)");
  bench_cmd->add_option("--cols", "Fine columns per terrain (default 250)");
  bench_cmd->add_option("--obstacles", "Maximum obstacles per terrain (default 30)");
  bench_cmd->add_option("--seed", "Master seed (default 42)");
  bench_cmd->add_option("--spacing", "Distance between fine cell centers (default 1)");
  bench_cmd->add_option("--specs", "Comma list of weight specs (default pythagoras,penalty)");
  bench_cmd->add_option("--roughness-min", "Lowest roughness of the schedule (default 0.05)");
  bench_cmd->add_option("--roughness-max", "Highest roughness of the schedule (default 0.5)");
  bench_cmd->add_option("--threads", "Worker threads, 0 = all cores (default 0)");
  bench_cmd->add_option("-o,--output", bench_output, "CSV file (default: standard output)");

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Render a terrain and route as SVG");
  render_cmd->add_option("-i,--terrain", render_args.terrain, "Terrain file")->required();
  render_cmd->add_option("-p,--path", render_args.path, "Path file")->required();
  render_cmd->add_option("-o,--output", render_args.output, "SVG file to write")->required();
  render_cmd->add_flag("--show-tree", render_args.show_tree, "Overlay the spanning tree");
  render_cmd->add_option("--cell-px", render_args.cell_px, "Pixels per fine cell (0 = auto)")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen_cmd) return gen_terrain(gen, err);
    if (*plan_cmd) return plan(plan_args, out, err);
    if (*bench_cmd) return bench(*bench_cmd, bench_config, bench_output, out, err);
    if (*render_cmd) return render(render_args, err);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const MismatchError& e) {
    err << "error: path does not match terrain: " << e.what() << '\n';
    return kMismatch;
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << '\n';
    return kGeneration;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace slopestc::cli
