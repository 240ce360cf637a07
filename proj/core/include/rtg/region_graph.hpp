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

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtg/region.hpp"
#include "rtg/simple_function.hpp"
#include "rtg/timed_automaton.hpp"

namespace rtg {

enum class MoveKind { ThinHit, MinAfterBoundary, MaxBeforeBoundary, ImmediateInterior };

const char* to_string(MoveKind kind);

struct Move {
  int source = 0;
  SimpleTimedAction alpha;
  int target = 0;
  MoveKind kind = MoveKind::ThinHit;

  bool operator==(const Move&) const = default;
};

// Per owned region, the index of the chosen move in that region's move list; -1 elsewhere.
using PositionalStrategy = std::vector<int>;

enum class GraphClass { ZeroPlayer, OnePlayerMax, OnePlayerMin, TwoPlayer };

const char* to_string(GraphClass c);

class MissingChoice : public std::runtime_error {
 public:
  explicit MissingChoice(int region)
      : std::runtime_error("strategy has no move for region " + std::to_string(region)), region_(region) {}
  int region() const { return region_; }

 private:
  int region_;
};

class RegionGraph {
 public:
  RegionGraph(std::shared_ptr<const RegionSpace> space, std::vector<std::vector<Move>> moves);

  const RegionSpace& space() const { return *space_; }
  std::shared_ptr<const RegionSpace> shared_space() const { return space_; }
  const TimedAutomaton& automaton() const { return space_->automaton(); }
  int size() const { return space_->size(); }

  const std::vector<Move>& moves(int region) const { return moves_[region]; }
  std::size_t num_moves() const;
  bool is_final(int region) const { return final_[region]; }
  Player owner(int region) const { return space_->owner(region); }
  // Non-final region with more than one move.
  bool has_choice(int region) const { return !final_[region] && moves_[region].size() > 1; }

 private:
  std::shared_ptr<const RegionSpace> space_;
  std::vector<std::vector<Move>> moves_;
  std::vector<bool> final_;
};

// Choose order: action index, Immediate before Boundary, b, clock index, target index.
bool choose_less(const Move& a, const Move& b);

RegionGraph build(const TimedAutomaton& aut);
RegionGraph build(std::shared_ptr<const RegionSpace> space);

RegionGraph restrict(const RegionGraph& g, const PositionalStrategy& sigma, Player side);
GraphClass classify(const RegionGraph& g);

// Upper bound |R|·|A|·(k+1)·|C| + |R|·|A| on the number of moves.
std::size_t move_count_bound(const RegionGraph& g);

std::string format_alpha(const SimpleTimedAction& alpha, const TimedAutomaton& aut);
std::string format_move(const RegionGraph& g, const Move& m);
std::string format_graph(const RegionGraph& g);

}  // namespace rtg
