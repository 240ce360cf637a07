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

#include <stdexcept>
#include <string>
#include <vector>

#include "rtg/region_graph.hpp"
#include "rtg/simple_function.hpp"

namespace rtg {

struct RegionalValue {
  std::vector<SimpleFunction> T;
  std::vector<NatInf> D;

  bool operator==(const RegionalValue&) const = default;
};

struct MoveScore {
  SimpleFunction t;
  NatInf d;
};

class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (T(R')⊕α, D(R')⊞α) for the move, as a function on the source region's closure.
MoveScore score_move(const RegionGraph& g, const RegionalValue& v, const Move& m);

// Value of a choiceless graph by following the unique move out of every region.
RegionalValue solve_zero_player(const RegionGraph& g);

// Choose applied to the full move set of every non-final region owned by side.
PositionalStrategy initial_strategy(const RegionGraph& g, Player side);
// Choose applied to the lex-best moves of every non-final region owned by side.
PositionalStrategy best_response(const RegionGraph& g, const RegionalValue& v, Player side);

PositionalStrategy improve_max(const PositionalStrategy& chi, const RegionalValue& v, const RegionGraph& g);
PositionalStrategy improve_min(const PositionalStrategy& mu, const RegionalValue& v, const RegionGraph& g);

struct InnerIteration {
  PositionalStrategy chi;
  RegionalValue value;
};

struct OuterIteration {
  PositionalStrategy mu;
  RegionalValue value;
  std::vector<InnerIteration> inner;
};

struct SolveTrace {
  std::vector<OuterIteration> outer;
};

struct OnePlayerResult {
  RegionalValue value;
  PositionalStrategy chi;
  int iterations = 0;
};

// Strategy improvement for Max on a graph whose Min regions are choiceless.
OnePlayerResult solve_one_player_max(const RegionGraph& g, std::vector<InnerIteration>* trace = nullptr);

struct Solution {
  RegionalValue value;
  PositionalStrategy mu;
  PositionalStrategy chi;
  int outer_iterations = 0;
  std::vector<int> inner_iterations;
};

Solution solve_minmax(const RegionGraph& g, SolveTrace* trace = nullptr);

std::string format_solution(const RegionGraph& g, const Solution& s);

}  // namespace rtg
