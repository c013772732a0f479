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

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "slopestc/cli.hpp"

namespace slopestc::testing {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// Value of `key=` in plan output, or empty.
inline std::string metric(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

struct SvgSummary {
  int rects = 0;
  int polylines = 0;
  int polyline_points = 0;
  int tree_lines = 0;
};

// Parses the SVG with an XML parser (throws on malformed XML) and counts the
// interesting elements.
inline SvgSummary parse_svg(const std::string& text) {
  namespace pt = boost::property_tree;
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  SvgSummary s;
  const pt::ptree& svg = tree.get_child("svg");
  for (const auto& [name, child] : svg) {
    if (name == "g") {
      const std::string cls = child.get<std::string>("<xmlattr>.class", "");
      for (const auto& [inner, node] : child) {
        if (inner == "rect") ++s.rects;
        if (inner == "line" && cls == "tree") ++s.tree_lines;
      }
    } else if (name == "polyline") {
      ++s.polylines;
      std::istringstream pts(child.get<std::string>("<xmlattr>.points"));
      std::string p;
      while (pts >> p) ++s.polyline_points;
    }
  }
  return s;
}

}  // namespace slopestc::testing
