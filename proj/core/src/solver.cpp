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

#include "rtg/solver.hpp"

#include <stdexcept>

namespace rtg {

MoveScore score_move(const RegionGraph& g, const RegionalValue& v, const Move& m) {
  const ClockRegion& source = g.space().region(m.source).clocks;
  ClockSet reset = g.automaton().actions[m.alpha.action].reset;
  return {transfer(v.T[m.target], m.alpha, reset, source), bump(v.D[m.target])};
}

RegionalValue solve_zero_player(const RegionGraph& g) {
  const int n = g.size();
  RegionalValue v{std::vector<SimpleFunction>(n, SimpleFunction::infinite()),
                  std::vector<NatInf>(n, NatInf::infinity())};
  enum class Mark { Fresh, OnPath, Done };
  std::vector<Mark> mark(n, Mark::Fresh);
  std::vector<int> path;
  for (int start = 0; start < n; ++start) {
    if (mark[start] != Mark::Fresh) continue;
    path.clear();
    int cur = start;
    bool infinite = false;
    while (true) {
      if (mark[cur] == Mark::Done) break;
      if (mark[cur] == Mark::OnPath) {
        infinite = true;
        break;
      }
      mark[cur] = Mark::OnPath;
      path.push_back(cur);
      if (g.is_final(cur)) {
        v.T[cur] = SimpleFunction::constant(0);
        v.D[cur] = NatInf(0);
        path.pop_back();
        mark[cur] = Mark::Done;
        break;
      }
      const auto& ms = g.moves(cur);
      if (ms.size() > 1) throw std::logic_error("solve_zero_player needs a choiceless graph");
      if (ms.empty()) {
        infinite = true;
        break;
      }
      cur = ms.front().target;
    }
    // Unwind: every region on the path either feeds a cycle/deadlock or the solved successor.
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (!infinite) {
        MoveScore s = score_move(g, v, g.moves(*it).front());
        v.T[*it] = s.t;
        v.D[*it] = s.d;
      }
      mark[*it] = Mark::Done;
    }
  }
  return v;
}

PositionalStrategy initial_strategy(const RegionGraph& g, Player side) {
  PositionalStrategy sigma(g.size(), -1);
  for (int r = 0; r < g.size(); ++r) {
    if (g.owner(r) == side && !g.is_final(r) && !g.moves(r).empty()) sigma[r] = 0;
  }
  return sigma;
}

namespace {

// Index of the first lex-best move, and whether `current` is among the lex-best.
std::pair<int, bool> best_move(const RegionGraph& g, const RegionalValue& v, int r, Player side, int current) {
  const auto& ms = g.moves(r);
  const ClockRegion& region = g.space().region(r).clocks;
  std::vector<MoveScore> scores;
  scores.reserve(ms.size());
  int best = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    scores.push_back(score_move(g, v, ms[i]));
    if (i == 0) continue;
    auto c = lex_compare(scores[i].t, scores[i].d, scores[best].t, scores[best].d, region);
    if (side == Player::Max ? c > 0 : c < 0) best = static_cast<int>(i);
  }
  bool keep = false;
  if (current >= 0 && current < static_cast<int>(ms.size())) {
    keep = lex_compare(scores[current].t, scores[current].d, scores[best].t, scores[best].d, region) == 0;
  }
  return {best, keep};
}

PositionalStrategy improve(const PositionalStrategy& sigma, const RegionalValue& v, const RegionGraph& g,
                           Player side) {
  PositionalStrategy next(g.size(), -1);
  for (int r = 0; r < g.size(); ++r) {
    if (g.owner(r) != side || g.is_final(r) || g.moves(r).empty()) continue;
    int current = r < static_cast<int>(sigma.size()) ? sigma[r] : -1;
    auto [best, keep] = best_move(g, v, r, side, current);
    next[r] = keep ? current : best;
  }
  return next;
}

}  // namespace

PositionalStrategy best_response(const RegionGraph& g, const RegionalValue& v, Player side) {
  return improve(PositionalStrategy(g.size(), -1), v, g, side);
}

PositionalStrategy improve_max(const PositionalStrategy& chi, const RegionalValue& v, const RegionGraph& g) {
  return improve(chi, v, g, Player::Max);
}

PositionalStrategy improve_min(const PositionalStrategy& mu, const RegionalValue& v, const RegionGraph& g) {
  return improve(mu, v, g, Player::Min);
}

OnePlayerResult solve_one_player_max(const RegionGraph& g, std::vector<InnerIteration>* trace) {
  OnePlayerResult result;
  PositionalStrategy chi = initial_strategy(g, Player::Max);
  const int limit = g.size() + 1;
  while (true) {
    if (++result.iterations > limit) throw NonTermination("Max strategy improvement exceeded |R|+1 iterations");
    RegionalValue v = solve_zero_player(restrict(g, chi, Player::Max));
    if (trace) trace->push_back({chi, v});
    PositionalStrategy next = improve_max(chi, v, g);
    if (next == chi) {
      result.value = std::move(v);
      result.chi = std::move(chi);
      return result;
    }
    chi = std::move(next);
  }
}

Solution solve_minmax(const RegionGraph& g, SolveTrace* trace) {
  Solution sol;
  PositionalStrategy mu = initial_strategy(g, Player::Min);
  const int limit = g.size() + 1;
  while (true) {
    if (++sol.outer_iterations > limit) throw NonTermination("Min strategy improvement exceeded |R|+1 iterations");
    OuterIteration step;
    OnePlayerResult inner = solve_one_player_max(restrict(g, mu, Player::Min), trace ? &step.inner : nullptr);
    sol.inner_iterations.push_back(inner.iterations);
    if (trace) {
      step.mu = mu;
      step.value = inner.value;
      trace->outer.push_back(std::move(step));
    }
    PositionalStrategy next = improve_min(mu, inner.value, g);
    if (next == mu) {
      sol.value = std::move(inner.value);
      break;
    }
    mu = std::move(next);
  }
  sol.mu = best_response(g, sol.value, Player::Min);
  sol.chi = best_response(g, sol.value, Player::Max);
  return sol;
}

std::string format_solution(const RegionGraph& g, const Solution& s) {
  const auto& clocks = g.automaton().clocks;
  std::string out;
  for (int r = 0; r < g.size(); ++r) {
    out += g.space().format(r) + " | T=" + to_string(s.value.T[r], clocks) + " | D=" + to_string(s.value.D[r]);
    auto choice = [&](const PositionalStrategy& sigma) -> std::string {
      if (r >= static_cast<int>(sigma.size()) || sigma[r] < 0) return "-";
      return format_move(g, g.moves(r)[sigma[r]]);
    };
    out += " | min=" + choice(s.mu) + " | max=" + choice(s.chi) + "\n";
  }
  return out;
}

}  // namespace rtg
