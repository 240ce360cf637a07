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

#include "rtg/verify.hpp"

#include <optional>
#include <random>
#include <utility>

#include "json.hpp"

namespace rtg {

const char* to_string(OptMode m) {
  switch (m) {
    case OptMode::MinMax: return "MinMax";
    case OptMode::Max: return "Max";
    case OptMode::Min: return "Min";
    case OptMode::ZeroPlayer: return "ZeroPlayer";
    case OptMode::Geq: return "Geq";
    case OptMode::Leq: return "Leq";
  }
  return "?";
}

const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::TViolation: return "TViolation";
    case Violation::Kind::DViolation: return "DViolation";
    case Violation::Kind::FinalViolation: return "FinalViolation";
    case Violation::Kind::InfinityMismatch: return "InfinityMismatch";
    case Violation::Kind::ChoiceInZeroPlayer: return "ChoiceInZeroPlayer";
    case Violation::Kind::Malformed: return "Malformed";
  }
  return "?";
}

namespace {

using Pair = std::pair<ExtRational, NatInf>;

std::strong_ordering lex(const Pair& a, const Pair& b) {
  if (auto c = a.first <=> b.first; c != 0) return c;
  return a.second <=> b.second;
}

Pair concrete_value(const RegionalValue& v, int r, const Valuation& s) { return {eval(v.T[r], s), v.D[r]}; }

Pair concrete_score(const RegionalValue& v, const RegionGraph& g, const Move& m, const Valuation& s) {
  ClockSet reset = g.automaton().actions[m.alpha.action].reset;
  Valuation next = simple_successor(s, m.alpha, reset);
  return {ExtRational(wait_time(s, m.alpha)) + eval(v.T[m.target], next), bump(v.D[m.target])};
}

std::string describe(const Pair& p) { return "(" + to_string(p.first) + "," + to_string(p.second) + ")"; }

std::string describe_point(const Valuation& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
  return out + ")";
}

}  // namespace

std::vector<Violation> verify_opt(const RegionalValue& v, const RegionGraph& g, OptMode mode, std::uint64_t seed) {
  std::vector<Violation> out;
  if (static_cast<int>(v.T.size()) != g.size() || static_cast<int>(v.D.size()) != g.size()) {
    out.push_back({Violation::Kind::Malformed, -1, "value size does not match region count"});
    return out;
  }
  const Pair zero{ExtRational(Rational(0)), NatInf(0)};
  const Pair top{ExtRational::infinity(), NatInf::infinity()};
  for (int r = 0; r < g.size(); ++r) {
    if (v.T[r].is_infinite() != v.D[r].is_infinite()) {
      out.push_back({Violation::Kind::InfinityMismatch, r, "T and D disagree on infinity"});
      continue;
    }
    const ClockRegion& region = g.space().region(r).clocks;
    std::vector<Valuation> points{region.representative()};
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(r));
    for (int i = 0; i < 5; ++i) points.push_back(sample_point(region, rng));

    const auto& ms = g.moves(r);
    if (mode == OptMode::ZeroPlayer && !g.is_final(r) && ms.size() > 1) {
      out.push_back({Violation::Kind::ChoiceInZeroPlayer, r, std::to_string(ms.size()) + " moves"});
      continue;
    }
    bool maximize = mode == OptMode::Max || mode == OptMode::Geq ||
                    (mode == OptMode::MinMax && g.owner(r) == Player::Max);
    for (const Valuation& s : points) {
      Pair have = concrete_value(v, r, s);
      if (g.is_final(r)) {
        auto c = lex(have, zero);
        bool ok = mode == OptMode::Geq ? c >= 0 : (mode == OptMode::Leq ? c <= 0 : c == 0);
        if (!ok) {
          out.push_back({Violation::Kind::FinalViolation, r, describe(have) + " at " + describe_point(s)});
          break;
        }
        continue;
      }
      std::optional<Pair> best;
      for (const Move& m : ms) {
        Pair p = concrete_score(v, g, m, s);
        if (!best || (maximize ? lex(p, *best) > 0 : lex(p, *best) < 0)) best = std::move(p);
      }
      Pair want = best ? *best : top;
      auto c = lex(have, want);
      bool ok = mode == OptMode::Geq ? c >= 0 : (mode == OptMode::Leq ? c <= 0 : c == 0);
      if (!ok) {
        auto kind = have.first != want.first ? Violation::Kind::TViolation : Violation::Kind::DViolation;
        out.push_back({kind, r, "have " + describe(have) + " want " + describe(want) + " at " + describe_point(s)});
        break;
      }
    }
  }
  return out;
}

std::string violation_json(const Violation& v, const RegionGraph& g) {
  nlohmann::json j;
  j["kind"] = to_string(v.kind);
  j["region_index"] = v.region;
  if (v.region >= 0 && v.region < g.size()) j["region"] = g.space().format(v.region);
  j["detail"] = v.detail;
  return j.dump();
}

RegionalValue value_iteration_oracle(const RegionGraph& g, int* sweeps) {
  const int n = g.size();
  RegionalValue cur{std::vector<SimpleFunction>(n, SimpleFunction::infinite()),
                    std::vector<NatInf>(n, NatInf::infinity())};
  for (int r = 0; r < n; ++r) {
    if (g.is_final(r)) {
      cur.T[r] = SimpleFunction::constant(0);
      cur.D[r] = NatInf(0);
    }
  }
  std::vector<Valuation> reps(n);
  for (int r = 0; r < n; ++r) reps[r] = g.space().region(r).clocks.representative();

  for (int sweep = 1; sweep <= n + 1; ++sweep) {
    RegionalValue next = cur;
    for (int r = 0; r < n; ++r) {
      if (g.is_final(r)) continue;
      const bool maximize = g.owner(r) == Player::Max;
      std::optional<Pair> best;
      std::optional<MoveScore> best_symbolic;
      for (const Move& m : g.moves(r)) {
        Pair p = concrete_score(cur, g, m, reps[r]);
        if (!best || (maximize ? lex(p, *best) > 0 : lex(p, *best) < 0)) {
          best = std::move(p);
          best_symbolic = score_move(g, cur, m);
        }
      }
      if (best_symbolic) {
        next.T[r] = best_symbolic->t;
        next.D[r] = best_symbolic->d;
      } else {
        next.T[r] = SimpleFunction::infinite();
        next.D[r] = NatInf::infinity();
      }
    }
    if (next == cur) {
      if (sweeps) *sweeps = sweep;
      return cur;
    }
    cur = std::move(next);
  }
  throw NoFixpoint("value iteration did not stabilise within |R|+1 sweeps");
}

bool identical(const RegionalValue& a, const RegionalValue& b) { return a == b; }

std::vector<int> differing_regions(const RegionalValue& a, const RegionalValue& b) {
  std::vector<int> out;
  for (std::size_t r = 0; r < a.T.size() && r < b.T.size(); ++r) {
    if (!(a.T[r] == b.T[r]) || !(a.D[r] == b.D[r])) out.push_back(static_cast<int>(r));
  }
  return out;
}

}  // namespace rtg
