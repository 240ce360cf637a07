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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtg/region_graph.hpp"
#include "rtg/solver.hpp"

namespace rtg {

enum class OptMode { MinMax, Max, Min, ZeroPlayer, Geq, Leq };

const char* to_string(OptMode m);

struct Violation {
  enum class Kind { TViolation, DViolation, FinalViolation, InfinityMismatch, ChoiceInZeroPlayer, Malformed };

  Kind kind = Kind::Malformed;
  int region = -1;
  std::string detail;
};

const char* to_string(Violation::Kind k);

// Re-derives each region's equation right-hand side from concrete evaluations at the
// representative and five seeded interior points, and reports every mismatch.
std::vector<Violation> verify_opt(const RegionalValue& v, const RegionGraph& g, OptMode mode,
                                  std::uint64_t seed = 0);

// One JSON object per violation, as used by the command-line tool.
std::string violation_json(const Violation& v, const RegionGraph& g);

class NoFixpoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Jacobi value iteration of the lexicographic Bellman operator from (inf, inf).
RegionalValue value_iteration_oracle(const RegionGraph& g, int* sweeps = nullptr);

bool identical(const RegionalValue& a, const RegionalValue& b);
std::vector<int> differing_regions(const RegionalValue& a, const RegionalValue& b);

}  // namespace rtg
