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
#include <string>
#include <string_view>
#include <vector>

#include "rtg/model.hpp"
#include "rtg/timed_automaton.hpp"

namespace rtg {

struct CountdownMove {
  int from = 0;
  int to = 0;
  std::int64_t weight = 1;

  bool operator==(const CountdownMove&) const = default;
};

struct CountdownGame {
  int num_nodes = 0;
  std::vector<CountdownMove> moves;
  int initial = 0;
  std::int64_t budget = 1;

  bool operator==(const CountdownGame&) const = default;
};

// wins[n][B]: player 1 wins from node n with remaining budget B (B in 0..budget).
struct CountdownSolution {
  std::vector<std::vector<bool>> wins;

  bool player1_wins(int node, std::int64_t budget) const { return wins[node][budget]; }
};

CountdownSolution solve_countdown(const CountdownGame& g);

CountdownGame gen_random_countdown(std::uint64_t seed, int nodes, std::int64_t b0, std::int64_t max_weight = 4);

std::string serialize_countdown(const CountdownGame& g);
CountdownGame parse_countdown(std::string_view text);

// Two-clock game: clock b is never reset and measures spent budget; clock c times
// each move. Min owns the nodes; Max owns the (node, weight) choices and the sinks.
ModelFile reduce_to_model(const CountdownGame& g);
TimedAutomaton reduce_to_ta(const CountdownGame& g);

std::string countdown_node_name(int n);

}  // namespace rtg
