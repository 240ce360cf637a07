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

#include "doctest.h"
#include "rtg/region_graph.hpp"
#include "rtg/solver.hpp"
#include "rtg/verify.hpp"
#include "support/testing.hpp"

namespace rtg {
namespace {

Rational q(const char* s) { return parse_rational(s); }

RegionGraph corpus_graph(const char* name) {
  return build(testing::load(testing::corpus_dir() / (std::string(name) + ".rtg")));
}

int region_at(const RegionGraph& g, int location, const char* x) {
  return *g.space().index_of(Configuration{location, {q(x)}});
}

// The same function up to the region's normal form.
bool same_on(const RegionGraph& g, int r, const SimpleFunction& a, const SimpleFunction& b) {
  const ClockRegion& cr = g.space().region(r).clocks;
  return normalize(a, cr) == normalize(b, cr);
}

int index_of_kind(const RegionGraph& g, int r, MoveKind kind) {
  const auto& ms = g.moves(r);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].kind == kind) return static_cast<int>(i);
  }
  return -1;
}

TEST_CASE("zero-player solve") {
  RegionGraph g = corpus_graph("a2_max_wait");
  int zero = region_at(g, 0, "0");
  PositionalStrategy chi(g.size(), -1);
  for (int r = 0; r < g.size(); ++r) {
    if (!g.is_final(r)) chi[r] = 0;
  }
  chi[zero] = index_of_kind(g, zero, MoveKind::MaxBeforeBoundary);
  RegionalValue v = solve_zero_player(restrict(g, chi, Player::Max));
  CHECK(same_on(g, zero, v.T[zero], SimpleFunction::minus_clock(1, 0)));
  CHECK(v.T[zero] == SimpleFunction::constant(1));
  CHECK(v.D[zero] == NatInf(1));
  int final_region = region_at(g, 1, "1/2");
  CHECK(v.T[final_region] == SimpleFunction::constant(0));
  CHECK(v.D[final_region] == NatInf(0));

  RegionGraph cyc = corpus_graph("a3_max_cycle");
  PositionalStrategy loop(cyc.size(), -1);
  for (int r = 0; r < cyc.size(); ++r) {
    if (cyc.is_final(r)) continue;
    loop[r] = 0;
    const auto& ms = cyc.moves(r);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (cyc.automaton().actions[ms[i].alpha.action].reset != 0) loop[r] = static_cast<int>(i);
    }
  }
  RegionalValue w = solve_zero_player(restrict(cyc, loop, Player::Max));
  for (int r = 0; r < cyc.size(); ++r) {
    if (cyc.space().region(r).location != 0) continue;
    CHECK(w.T[r].is_infinite());
    CHECK(w.D[r].is_infinite());
  }
}

TEST_CASE("improve_max leaves the wait-zero move for the late exit") {
  RegionGraph g = corpus_graph("a2_max_wait");
  int zero = region_at(g, 0, "0");
  PositionalStrategy chi = initial_strategy(g, Player::Max);
  CHECK(g.moves(zero)[chi[zero]].alpha == SimpleTimedAction::boundary(0, 0, 0));
  RegionalValue v = solve_zero_player(restrict(g, chi, Player::Max));
  CHECK(v.T[zero] == SimpleFunction::constant(0));
  PositionalStrategy next = improve_max(chi, v, g);
  CHECK(g.moves(zero)[next[zero]].alpha == SimpleTimedAction::boundary(0, 1, 0));

  OnePlayerResult best = solve_one_player_max(g);
  CHECK(improve_max(best.chi, best.value, g) == best.chi);
}

TEST_CASE("improve_max keeps the current move on ties") {
  RegionGraph g = corpus_graph("a2_max_wait");
  int zero = region_at(g, 0, "0");
  OnePlayerResult best = solve_one_player_max(g);
  // Both wait-until-one moves score 1 - x with D = 1 from zero.
  PositionalStrategy chi = best.chi;
  int thin = -1;
  const auto& ms = g.moves(zero);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].kind == MoveKind::ThinHit && ms[i].alpha.b == 1) thin = static_cast<int>(i);
  }
  REQUIRE(thin >= 0);
  REQUIRE(thin != chi[zero]);
  chi[zero] = thin;
  CHECK(improve_max(chi, best.value, g)[zero] == thin);
}

TEST_CASE("improve_min prefers leaving now") {
  RegionGraph g = corpus_graph("a0_min_exit");
  int open = region_at(g, 0, "1/2");
  PositionalStrategy mu(g.size(), -1);
  for (int r = 0; r < g.size(); ++r) {
    if (!g.is_final(r)) mu[r] = static_cast<int>(g.moves(r).size()) - 1;
  }
  REQUIRE(g.moves(open)[mu[open]].kind == MoveKind::ThinHit);
  RegionalValue v = solve_zero_player(restrict(g, mu, Player::Min));
  CHECK(v.T[open] == SimpleFunction::minus_clock(1, 0));
  PositionalStrategy next = improve_min(mu, v, g);
  CHECK(g.moves(open)[next[open]].kind == MoveKind::ImmediateInterior);
  for (int r = 0; r < g.size(); ++r) {
    if (g.is_final(r)) CHECK(next[r] == -1);
  }
}

TEST_CASE("A0: Min leaves at once") {
  RegionGraph g = corpus_graph("a0_min_exit");
  Solution s = solve_minmax(g);
  for (int r = 0; r < g.size(); ++r) {
    if (g.space().region(r).location != 0) continue;
    CHECK(s.value.T[r] == SimpleFunction::constant(0));
    CHECK(s.value.D[r] == NatInf(1));
  }
  CHECK(s.value == value_iteration_oracle(g));
}

TEST_CASE("A2: Max waits until one") {
  RegionGraph g = corpus_graph("a2_max_wait");
  Solution s = solve_minmax(g);
  for (int r = 0; r < g.size(); ++r) {
    if (g.space().region(r).location != 0) continue;
    CHECK(same_on(g, r, s.value.T[r], SimpleFunction::minus_clock(1, 0)));
    CHECK(s.value.D[r] == NatInf(1));
  }
  int open = region_at(g, 0, "1/2");
  CHECK(eval(s.value.T[open], {q("1/4")}) == ExtRational(q("3/4")));
  CHECK(s.value == value_iteration_oracle(g));
}

TEST_CASE("A3: the reset loop") {
  RegionGraph gmax = corpus_graph("a3_max_cycle");
  Solution smax = solve_minmax(gmax);
  RegionGraph gmin = corpus_graph("a3_min_cycle");
  Solution smin = solve_minmax(gmin);
  for (int r = 0; r < gmax.size(); ++r) {
    if (gmax.space().region(r).location != 0) continue;
    CHECK(smax.value.T[r].is_infinite());
    CHECK(smax.value.D[r].is_infinite());
    CHECK(same_on(gmin, r, smin.value.T[r], SimpleFunction::minus_clock(1, 0)));
    CHECK(smin.value.D[r] == NatInf(1));
  }
  CHECK(smax.value == value_iteration_oracle(gmax));
  CHECK(smin.value == value_iteration_oracle(gmin));
}

TEST_CASE("everything final") {
  RegionGraph g = corpus_graph("all_final");
  Solution s = solve_minmax(g);
  for (int r = 0; r < g.size(); ++r) {
    CHECK(s.value.T[r] == SimpleFunction::constant(0));
    CHECK(s.value.D[r] == NatInf(0));
  }
}

TEST_CASE("one-player Max on a choiceless graph matches the path solve") {
  RegionGraph g = corpus_graph("a2_max_wait");
  Solution s = solve_minmax(g);
  RegionGraph fixed = restrict(g, s.chi, Player::Max);
  CHECK(solve_one_player_max(fixed).value == solve_zero_player(fixed));
}

TEST_CASE("solutions satisfy the equations and respect the iteration bound") {
  for (const auto& inst : testing::all_instances(5)) {
    CAPTURE(inst.name);
    RegionGraph g = build(inst.aut);
    SolveTrace trace;
    Solution s = solve_minmax(g, &trace);
    CHECK(verify_opt(s.value, g, OptMode::MinMax).empty());
    CHECK(s.outer_iterations <= g.size() + 1);
    for (int n : s.inner_iterations) CHECK(n <= g.size() + 1);
    CHECK(static_cast<int>(trace.outer.size()) == s.outer_iterations);
    for (int r = 0; r < g.size(); ++r) {
      CHECK(s.value.T[r].is_infinite() == s.value.D[r].is_infinite());
      if (g.is_final(r)) {
        CHECK(s.value.T[r] == SimpleFunction::constant(0));
        CHECK(s.value.D[r] == NatInf(0));
      }
    }
  }
}

TEST_CASE("solve dump format") {
  RegionGraph g = corpus_graph("a0_min_exit");
  std::string out = format_solution(g, solve_minmax(g));
  CHECK(out.find("loc=l; int=[x:0]; frac=[{},{x}] | T=const 0 | D=1 | min=(a,now)->[loc=g; int=[x:0]; "
                 "frac=[{},{x}]] | max=-\n") != std::string::npos);
}

}  // namespace
}  // namespace rtg
