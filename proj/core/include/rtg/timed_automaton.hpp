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
#include <optional>
#include <string>
#include <vector>

#include "rtg/rational.hpp"

namespace rtg {

using ClockSet = std::uint32_t;
inline constexpr int kMaxClocks = 16;

inline bool has_clock(ClockSet s, int c) { return (s >> c) & 1u; }
inline ClockSet clock_bit(int c) { return ClockSet{1} << c; }

enum class Player { Min, Max };

const char* to_string(Player p);

enum class CmpOp { Lt, Le, Eq, Ge, Gt };

const char* to_string(CmpOp op);

template <class T>
bool compare_with(const T& lhs, CmpOp op, const T& rhs) {
  switch (op) {
    case CmpOp::Lt: return lhs < rhs;
    case CmpOp::Le: return lhs <= rhs;
    case CmpOp::Eq: return lhs == rhs;
    case CmpOp::Ge: return lhs >= rhs;
    case CmpOp::Gt: return lhs > rhs;
  }
  return false;
}

// clock - other OP constant; other == -1 means a plain bound on clock.
struct Atom {
  int clock = 0;
  int other = -1;
  CmpOp op = CmpOp::Le;
  std::int64_t constant = 0;

  bool operator==(const Atom&) const = default;
};

using Valuation = std::vector<Rational>;

struct Constraint {
  std::vector<Atom> atoms;  // conjunction; empty means true

  bool satisfied(const Valuation& v) const;
  // Values given as integers scaled by a common positive factor.
  bool satisfied_scaled(const std::vector<std::int64_t>& scaled, std::int64_t scale) const;
  std::int64_t max_constant() const;

  bool operator==(const Constraint&) const = default;
};

// Per-location clock constraint; locations without one are excluded entirely.
struct Zone {
  std::vector<std::optional<Constraint>> per_location;

  static Zone everything(int num_locations);
  static Zone nothing(int num_locations);

  bool contains(int location, const Valuation& v) const;
  bool operator==(const Zone&) const = default;
};

struct Configuration {
  int location = 0;
  Valuation valuation;

  bool operator==(const Configuration&) const = default;
};

struct TimedAction {
  int action = 0;
  Rational delay;
};

struct Location {
  std::string name;
  Player owner = Player::Min;
};

struct Action {
  std::string name;
  Zone enabled;
  std::vector<int> target;  // indexed by source location
  ClockSet reset = 0;
};

enum class StepError {
  None,
  ExceedsBound,
  LeavesStateZone,
  NotEnabled,
  SuccessorNotInS,
  SourceNotInS,
};

const char* to_string(StepError e);

struct StepResult {
  std::optional<Configuration> config;
  StepError error = StepError::None;

  explicit operator bool() const { return config.has_value(); }
};

struct TimedAutomaton {
  std::vector<std::string> clocks;
  std::int64_t k = 0;
  std::vector<Location> locations;
  std::vector<Action> actions;
  Zone state;
  Zone final;

  int num_clocks() const { return static_cast<int>(clocks.size()); }
  int num_locations() const { return static_cast<int>(locations.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  std::optional<int> clock_index(const std::string& name) const;
  std::optional<int> location_index(const std::string& name) const;

  bool in_bounds(const Valuation& v) const;
  bool in_state(const Configuration& s) const { return state.contains(s.location, s.valuation); }
  bool in_final(const Configuration& s) const { return final.contains(s.location, s.valuation); }
};

Valuation reset_clocks(const Valuation& v, ClockSet reset);
Valuation advance(const Valuation& v, const Rational& t);

StepResult delay(const Configuration& s, const Rational& t, const TimedAutomaton& aut);
StepResult discrete_succ(const Configuration& s, int action, const TimedAutomaton& aut);
StepResult timed_succ(const Configuration& s, const TimedAction& tau, const TimedAutomaton& aut);

std::string format_configuration(const Configuration& s, const TimedAutomaton& aut);

}  // namespace rtg
