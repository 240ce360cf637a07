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

#include "rtg/region_graph.hpp"

#include <algorithm>
#include <tuple>

namespace rtg {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::ThinHit: return "ThinHit";
    case MoveKind::MinAfterBoundary: return "MinAfterBoundary";
    case MoveKind::MaxBeforeBoundary: return "MaxBeforeBoundary";
    case MoveKind::ImmediateInterior: return "ImmediateInterior";
  }
  return "?";
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::ZeroPlayer: return "ZeroPlayer";
    case GraphClass::OnePlayerMax: return "OnePlayerMax";
    case GraphClass::OnePlayerMin: return "OnePlayerMin";
    case GraphClass::TwoPlayer: return "TwoPlayer";
  }
  return "?";
}

RegionGraph::RegionGraph(std::shared_ptr<const RegionSpace> space, std::vector<std::vector<Move>> moves)
    : space_(std::move(space)), moves_(std::move(moves)) {
  final_.resize(space_->size());
  for (int r = 0; r < space_->size(); ++r) final_[r] = space_->is_final(r);
}

std::size_t RegionGraph::num_moves() const {
  std::size_t n = 0;
  for (const auto& ms : moves_) n += ms.size();
  return n;
}

namespace {

auto choose_key(const Move& m) {
  return std::make_tuple(m.alpha.action, !m.alpha.immediate, m.alpha.b, m.alpha.clock, m.target);
}

int kind_priority(MoveKind k) {
  switch (k) {
    case MoveKind::ThinHit: return 0;
    case MoveKind::ImmediateInterior: return 1;
    default: return 2;
  }
}

std::vector<Move> moves_from(const RegionSpace& space, int r) {
  const TimedAutomaton& aut = space.automaton();
  const ClockRegion& source = space.region(r).clocks;
  const Player owner = space.owner(r);
  std::vector<Move> found;
  auto add = [&](const SimpleTimedAction& alpha, std::optional<int> target, MoveKind kind) {
    if (target) found.push_back(Move{r, alpha, *target, kind});
  };

  std::vector<int> chain = space.future_chain(r);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    const int rj = chain[j];
    if (space.is_thin(rj)) {
      auto bc = boundary_target(source, space.region(rj).clocks, aut.k);
      for (int a = 0; a < aut.num_actions(); ++a) {
        add(SimpleTimedAction::boundary(a, bc->first, bc->second), space.discrete_succ(rj, a),
            MoveKind::ThinHit);
      }
      if (owner == Player::Min && j + 1 < chain.size()) {
        for (int a = 0; a < aut.num_actions(); ++a) {
          add(SimpleTimedAction::boundary(a, bc->first, bc->second), space.discrete_succ(chain[j + 1], a),
              MoveKind::MinAfterBoundary);
        }
      }
    } else if (owner == Player::Max) {
      // Max may stop just before the closing boundary, even when that boundary is outside S.
      auto closing = geometric_successor(space.region(rj).clocks, aut.k);
      auto bc = boundary_target(source, *closing, aut.k);
      for (int a = 0; a < aut.num_actions(); ++a) {
        add(SimpleTimedAction::boundary(a, bc->first, bc->second), space.discrete_succ(rj, a),
            MoveKind::MaxBeforeBoundary);
      }
    }
  }
  if (!space.is_thin(r)) {
    for (int a = 0; a < aut.num_actions(); ++a) {
      add(SimpleTimedAction::now(a), space.discrete_succ(r, a), MoveKind::ImmediateInterior);
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const Move& a, const Move& b) {
    return kind_priority(a.kind) < kind_priority(b.kind);
  });
  std::vector<Move> unique;
  std::vector<SimpleFunction> waits;
  const SimpleFunction zero = SimpleFunction::constant(0);
  for (const Move& m : found) {
    SimpleFunction w = transfer(zero, m.alpha, 0, source);
    bool seen = false;
    for (std::size_t i = 0; i < unique.size() && !seen; ++i) {
      seen = unique[i].alpha.action == m.alpha.action && unique[i].target == m.target && waits[i] == w;
    }
    if (!seen) {
      unique.push_back(m);
      waits.push_back(w);
    }
  }
  std::sort(unique.begin(), unique.end(), choose_less);
  return unique;
}

}  // namespace

bool choose_less(const Move& a, const Move& b) { return choose_key(a) < choose_key(b); }

RegionGraph build(const TimedAutomaton& aut) { return build(std::make_shared<const RegionSpace>(aut)); }

RegionGraph build(std::shared_ptr<const RegionSpace> space) {
  std::vector<std::vector<Move>> moves(space->size());
  for (int r = 0; r < space->size(); ++r) moves[r] = moves_from(*space, r);
  return RegionGraph(std::move(space), std::move(moves));
}

RegionGraph restrict(const RegionGraph& g, const PositionalStrategy& sigma, Player side) {
  std::vector<std::vector<Move>> moves(g.size());
  for (int r = 0; r < g.size(); ++r) {
    const auto& ms = g.moves(r);
    if (g.owner(r) != side || g.is_final(r) || ms.empty()) {
      moves[r] = ms;
      continue;
    }
    if (r >= static_cast<int>(sigma.size()) || sigma[r] < 0 || sigma[r] >= static_cast<int>(ms.size())) {
      throw MissingChoice(r);
    }
    moves[r] = {ms[sigma[r]]};
  }
  return RegionGraph(g.shared_space(), std::move(moves));
}

GraphClass classify(const RegionGraph& g) {
  bool max_choice = false;
  bool min_choice = false;
  for (int r = 0; r < g.size(); ++r) {
    if (!g.has_choice(r)) continue;
    (g.owner(r) == Player::Max ? max_choice : min_choice) = true;
  }
  if (max_choice && min_choice) return GraphClass::TwoPlayer;
  if (max_choice) return GraphClass::OnePlayerMax;
  if (min_choice) return GraphClass::OnePlayerMin;
  return GraphClass::ZeroPlayer;
}

std::size_t move_count_bound(const RegionGraph& g) {
  const TimedAutomaton& aut = g.automaton();
  std::size_t ra = static_cast<std::size_t>(g.size()) * aut.num_actions();
  return ra * static_cast<std::size_t>(aut.k + 1) * aut.num_clocks() + ra;
}

std::string format_alpha(const SimpleTimedAction& alpha, const TimedAutomaton& aut) {
  std::string out = "(" + aut.actions[alpha.action].name;
  if (alpha.immediate) return out + ",now)";
  return out + ",b=" + std::to_string(alpha.b) + ",c=" + aut.clocks[alpha.clock] + ")";
}

std::string format_move(const RegionGraph& g, const Move& m) {
  return format_alpha(m.alpha, g.automaton()) + "->[" + g.space().format(m.target) + "]";
}

std::string format_graph(const RegionGraph& g) {
  std::string out;
  for (int r = 0; r < g.size(); ++r) {
    for (const Move& m : g.moves(r)) {
      out += g.space().format(r) + " --" + format_alpha(m.alpha, g.automaton()) + "--> " +
             g.space().format(m.target) + "\n";
    }
  }
  return out;
}

}  // namespace rtg
