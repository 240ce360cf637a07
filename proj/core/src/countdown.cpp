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

#include "rtg/countdown.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rtg {

CountdownSolution solve_countdown(const CountdownGame& g) {
  const std::int64_t top = g.budget;
  CountdownSolution sol;
  sol.wins.assign(g.num_nodes, std::vector<bool>(top + 1, false));
  for (int n = 0; n < g.num_nodes; ++n) sol.wins[n][0] = true;
  std::vector<std::map<std::int64_t, std::vector<int>>> by_weight(g.num_nodes);
  for (const CountdownMove& m : g.moves) by_weight[m.from][m.weight].push_back(m.to);
  for (std::int64_t b = 1; b <= top; ++b) {
    for (int n = 0; n < g.num_nodes; ++n) {
      bool win = false;
      for (const auto& [p, targets] : by_weight[n]) {
        if (p > b) break;
        win = std::all_of(targets.begin(), targets.end(), [&](int t) { return sol.wins[t][b - p]; });
        if (win) break;
      }
      sol.wins[n][b] = win;
    }
  }
  return sol;
}

CountdownGame gen_random_countdown(std::uint64_t seed, int nodes, std::int64_t b0, std::int64_t max_weight) {
  if (nodes < 1 || b0 < 1 || max_weight < 1) throw std::invalid_argument("countdown generator bounds must be positive");
  std::mt19937_64 rng(seed);
  CountdownGame g;
  g.num_nodes = nodes;
  g.budget = b0;
  g.initial = 0;
  for (int n = 0; n < nodes; ++n) {
    int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, nodes)));
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < degree) targets.insert(static_cast<int>(rng() % nodes));
    for (int t : targets) {
      std::int64_t w = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_weight));
      g.moves.push_back({n, t, w});
    }
  }
  return g;
}

std::string serialize_countdown(const CountdownGame& g) {
  std::string out = "countdown " + std::to_string(g.num_nodes) + " " + std::to_string(g.budget) + " " +
                    std::to_string(g.initial) + "\n";
  for (const CountdownMove& m : g.moves) {
    out += "move " + std::to_string(m.from) + " " + std::to_string(m.to) + " " + std::to_string(m.weight) + "\n";
  }
  return out;
}

CountdownGame parse_countdown(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CountdownGame g;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (!header) {
      if (key != "countdown" || !(ls >> g.num_nodes >> g.budget >> g.initial)) {
        throw ParseError(line_no, 1, "expected 'countdown <nodes> <B0> <n0>'");
      }
      if (g.num_nodes < 1 || g.budget < 1 || g.initial < 0 || g.initial >= g.num_nodes) {
        throw ParseError(line_no, 1, "countdown header out of range");
      }
      header = true;
    } else if (key == "move") {
      CountdownMove m;
      if (!(ls >> m.from >> m.to >> m.weight)) throw ParseError(line_no, 1, "expected 'move <from> <to> <weight>'");
      if (m.from < 0 || m.from >= g.num_nodes || m.to < 0 || m.to >= g.num_nodes || m.weight < 1) {
        throw ParseError(line_no, 1, "move out of range");
      }
      g.moves.push_back(m);
    } else {
      throw ParseError(line_no, 1, "unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(line_no, 1, "trailing input '" + extra + "'");
  }
  if (!header) throw ParseError(line_no, 1, "missing countdown header");
  return g;
}

std::string countdown_node_name(int n) { return "n" + std::to_string(n); }

namespace {

Atom atom(int clock, CmpOp op, std::int64_t constant, int other = -1) { return Atom{clock, other, op, constant}; }

}  // namespace

ModelFile reduce_to_model(const CountdownGame& g) {
  constexpr int kB = 0;
  constexpr int kC = 1;
  ModelFile m;
  m.clocks = {"b", "c"};
  m.k = g.budget;
  const Constraint urgent{{atom(kC, CmpOp::Eq, 0)}};

  m.locations.push_back({"goal", Player::Max, urgent});
  m.locations.push_back({"lose", Player::Max, urgent});
  for (int n = 0; n < g.num_nodes; ++n) m.locations.push_back({countdown_node_name(n), Player::Min, urgent});

  std::vector<std::map<std::int64_t, std::vector<int>>> by_weight(g.num_nodes);
  for (const CountdownMove& mv : g.moves) by_weight[mv.from][mv.weight].push_back(mv.to);
  auto pair_name = [](int n, std::int64_t p) { return countdown_node_name(n) + "_p" + std::to_string(p); };
  for (int n = 0; n < g.num_nodes; ++n) {
    for (const auto& [p, targets] : by_weight[n]) {
      (void)targets;
      Constraint inv{{atom(kC, CmpOp::Le, std::min(p, g.budget)), atom(kC, CmpOp::Le, 0, kB)}};
      m.locations.push_back({pair_name(n, p), Player::Max, inv});
    }
  }

  const std::vector<std::string> reset_c{"c"};
  m.edges.push_back({"lose", "stay", "lose", urgent, reset_c});
  for (int n = 0; n < g.num_nodes; ++n) {
    const std::string node = countdown_node_name(n);
    m.edges.push_back({node, "finish", "goal", Constraint{{atom(kB, CmpOp::Eq, g.budget)}}, reset_c});
    for (const auto& [p, targets] : by_weight[n]) {
      m.edges.push_back({node, "p" + std::to_string(p), pair_name(n, p), urgent, reset_c});
      // A weight above the whole budget can never be paid; only giving up remains.
      Constraint give_up{{atom(kB, CmpOp::Eq, g.budget)}};
      if (p <= g.budget) {
        std::set<int> seen;
        for (int t : targets) {
          if (!seen.insert(t).second) continue;
          m.edges.push_back({pair_name(n, p), "m" + std::to_string(n) + "_" + std::to_string(t),
                             countdown_node_name(t), Constraint{{atom(kC, CmpOp::Eq, p)}}, reset_c});
        }
        give_up.atoms.push_back(atom(kC, CmpOp::Lt, p));
      }
      m.edges.push_back({pair_name(n, p), "give_up", "lose", give_up, reset_c});
    }
  }
  m.finals.push_back({"goal", urgent});
  return m;
}

TimedAutomaton reduce_to_ta(const CountdownGame& g) { return compile_model(reduce_to_model(g)); }

}  // namespace rtg
