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

// Edge-weight functions for the slope-aware coverage graph.
//
// Every function takes the two endpoint elevations and the horizontal
// distance between the endpoints. All of them are symmetric in the two
// elevations, which the undirected spanning-tree builders rely on.
//
// The printed form of the distance term reads sqrt(|h1-h2|^2 - d^2), which is
// imaginary on flat ground. The implemented form is the 3D straight-line
// distance sqrt(d^2 + (h1-h2)^2).

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace slopestc {

enum class WeightSpec {
  Unit,
  Pythagoras,
  SlopePenalty,
};

template <typename Scalar>
constexpr Scalar weight_unit(Scalar /*h1*/, Scalar /*h2*/, Scalar /*d*/) {
  return Scalar(1);
}

/// Straight-line distance between the two cell centers.
template <typename Scalar>
Scalar weight_pythagoras(Scalar h1, Scalar h2, Scalar d) {
  using std::sqrt;
  const Scalar dh = h1 - h2;
  return sqrt(d * d + dh * dh);
}

/// Straight-line distance scaled by (1 + |slope|).
template <typename Scalar>
Scalar weight_penalty(Scalar h1, Scalar h2, Scalar d) {
  using std::abs;
  return weight_pythagoras(h1, h2, d) * (Scalar(1) + abs(h1 - h2) / d);
}

template <typename Scalar>
Scalar edge_weight(WeightSpec spec, Scalar h1, Scalar h2, Scalar d) {
  switch (spec) {
    case WeightSpec::Unit:
      return weight_unit(h1, h2, d);
    case WeightSpec::Pythagoras:
      return weight_pythagoras(h1, h2, d);
    case WeightSpec::SlopePenalty:
      return weight_penalty(h1, h2, d);
  }
  return weight_unit(h1, h2, d);
}

// `unit`, `pythagoras`, `penalty`.
std::string_view to_string(WeightSpec spec);
std::optional<WeightSpec> parse_weight_spec(std::string_view text);

}  // namespace slopestc
