// Copyright 2026 The rtg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "rtg/region_graph.hpp"
#include "rtg/timed_automaton.hpp"

namespace rtg {

struct ModelViolation {
  enum class Kind { FinalOutsideState, ConstantExceedsBound, DeadlockRegion, BadShape };

  Kind kind = Kind::BadShape;
  std::string detail;
};

const char* to_string(ModelViolation::Kind k);

// Checks F ⊆ S region-wise, constants ≤ k, and that every non-final S-region has a move.
std::vector<ModelViolation> validate(const TimedAutomaton& aut);
std::vector<ModelViolation> validate(const TimedAutomaton& aut, const RegionGraph& g);

}  // namespace rtg
