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

#include "slopestc/weights.hpp"

namespace slopestc {

std::string_view to_string(WeightSpec spec) {
  switch (spec) {
    case WeightSpec::Unit:
      return "unit";
    case WeightSpec::Pythagoras:
      return "pythagoras";
    case WeightSpec::SlopePenalty:
      return "penalty";
  }
  return "unit";
}

std::optional<WeightSpec> parse_weight_spec(std::string_view text) {
  if (text == "unit") return WeightSpec::Unit;
  if (text == "pythagoras") return WeightSpec::Pythagoras;
  if (text == "penalty") return WeightSpec::SlopePenalty;
  return std::nullopt;
}

}  // namespace slopestc
