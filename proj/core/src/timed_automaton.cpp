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

#include "rtg/timed_automaton.hpp"

#include <algorithm>
#include <cstdlib>

namespace rtg {

const char* to_string(Player p) { return p == Player::Min ? "min" : "max"; }

const char* to_string(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Eq: return "=";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

const char* to_string(StepError e) {
  switch (e) {
    case StepError::None: return "None";
    case StepError::ExceedsBound: return "ExceedsBound";
    case StepError::LeavesStateZone: return "LeavesStateZone";
    case StepError::NotEnabled: return "NotEnabled";
    case StepError::SuccessorNotInS: return "SuccessorNotInS";
    case StepError::SourceNotInS: return "SourceNotInS";
  }
  return "?";
}

bool Constraint::satisfied(const Valuation& v) const {
  for (const Atom& a : atoms) {
    Rational lhs = v[a.clock];
    if (a.other >= 0) lhs -= v[a.other];
    if (!compare_with(lhs, a.op, Rational(a.constant))) return false;
  }
  return true;
}

bool Constraint::satisfied_scaled(const std::vector<std::int64_t>& scaled, std::int64_t scale) const {
  for (const Atom& a : atoms) {
    std::int64_t lhs = scaled[a.clock];
    if (a.other >= 0) lhs -= scaled[a.other];
    if (!compare_with(lhs, a.op, a.constant * scale)) return false;
  }
  return true;
}

std::int64_t Constraint::max_constant() const {
  std::int64_t m = 0;
  for (const Atom& a : atoms) m = std::max<std::int64_t>(m, a.constant < 0 ? -a.constant : a.constant);
  return m;
}

Zone Zone::everything(int num_locations) {
  Zone z;
  z.per_location.assign(num_locations, Constraint{});
  return z;
}

Zone Zone::nothing(int num_locations) {
  Zone z;
  z.per_location.assign(num_locations, std::nullopt);
  return z;
}

bool Zone::contains(int location, const Valuation& v) const {
  const auto& c = per_location[location];
  return c.has_value() && c->satisfied(v);
}

std::optional<int> TimedAutomaton::clock_index(const std::string& name) const {
  auto it = std::find(clocks.begin(), clocks.end(), name);
  if (it == clocks.end()) return std::nullopt;
  return static_cast<int>(it - clocks.begin());
}

std::optional<int> TimedAutomaton::location_index(const std::string& name) const {
  for (int i = 0; i < num_locations(); ++i) {
    if (locations[i].name == name) return i;
  }
  return std::nullopt;
}

bool TimedAutomaton::in_bounds(const Valuation& v) const {
  for (const Rational& x : v) {
    if (x < 0 || x > k) return false;
  }
  return true;
}

Valuation reset_clocks(const Valuation& v, ClockSet reset) {
  Valuation out = v;
  for (int c = 0; c < static_cast<int>(out.size()); ++c) {
    if (has_clock(reset, c)) out[c] = 0;
  }
  return out;
}

Valuation advance(const Valuation& v, const Rational& t) {
  Valuation out = v;
  for (Rational& x : out) x += t;
  return out;
}

StepResult delay(const Configuration& s, const Rational& t, const TimedAutomaton& aut) {
  Configuration out{s.location, advance(s.valuation, t)};
  if (!aut.in_bounds(out.valuation)) return {std::nullopt, StepError::ExceedsBound};
  // State zones are convex, so checking both ends covers the whole segment.
  if (!aut.in_state(s) || !aut.in_state(out)) return {std::nullopt, StepError::LeavesStateZone};
  return {std::move(out), StepError::None};
}

StepResult discrete_succ(const Configuration& s, int action, const TimedAutomaton& aut) {
  if (!aut.in_state(s)) return {std::nullopt, StepError::SourceNotInS};
  const Action& a = aut.actions[action];
  if (!a.enabled.contains(s.location, s.valuation)) return {std::nullopt, StepError::NotEnabled};
  Configuration out{a.target[s.location], reset_clocks(s.valuation, a.reset)};
  if (!aut.in_state(out)) return {std::nullopt, StepError::SuccessorNotInS};
  return {std::move(out), StepError::None};
}

StepResult timed_succ(const Configuration& s, const TimedAction& tau, const TimedAutomaton& aut) {
  if (tau.delay < 0) return {std::nullopt, StepError::ExceedsBound};
  StepResult mid = delay(s, tau.delay, aut);
  if (!mid) return mid;
  return discrete_succ(*mid.config, tau.action, aut);
}

std::string format_configuration(const Configuration& s, const TimedAutomaton& aut) {
  std::string out = aut.locations[s.location].name + ",(";
  for (std::size_t i = 0; i < s.valuation.size(); ++i) {
    if (i) out += ",";
    out += to_string(s.valuation[i]);
  }
  return out + ")";
}

}  // namespace rtg
