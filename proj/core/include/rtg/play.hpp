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
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtg/region_graph.hpp"
#include "rtg/solver.hpp"

namespace rtg {

class StuckState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-state slack ε′(s): ε·2^(−D(s)) by default, or the uniform ε/B.
struct EpsilonSchedule {
  Rational epsilon;
  std::optional<std::uint64_t> uniform_bound;

  Rational budget(NatInf d) const;
};

EpsilonSchedule geometric_schedule(const Rational& epsilon);
// Throws BExceeded when some finite D exceeds B.
EpsilonSchedule bounded_epsilon_schedule(const RegionalValue& v, std::uint64_t B, const Rational& epsilon);

class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::optional<TimedAction> act(const Configuration& s) = 0;
};

// Positional strategy over concrete states, derived from a region strategy.
class ConcreteStrategy : public Policy {
 public:
  ConcreteStrategy(std::shared_ptr<const RegionGraph> g, RegionalValue v, PositionalStrategy sigma,
                   EpsilonSchedule schedule);

  std::optional<TimedAction> act(const Configuration& s) override;

 private:
  std::shared_ptr<const RegionGraph> g_;
  RegionalValue v_;
  PositionalStrategy sigma_;
  EpsilonSchedule schedule_;
};

ConcreteStrategy concretize(std::shared_ptr<const RegionGraph> g, const RegionalValue& v,
                            const PositionalStrategy& sigma, const EpsilonSchedule& schedule, Player side);

// Delays from s after which an action can be taken legally: a single point when
// lo == hi, otherwise the open interval (lo, hi).
struct LegalWindow {
  int action = 0;
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
};

std::vector<LegalWindow> legal_windows(const RegionSpace& space, const Configuration& s);
Rational random_delay(const LegalWindow& w, std::mt19937_64& rng);

// Uniform over legal (window, action) pairs, then a uniform rational delay inside.
class RandomPolicy : public Policy {
 public:
  RandomPolicy(std::shared_ptr<const RegionSpace> space, std::uint64_t seed) : space_(std::move(space)), rng_(seed) {}

  std::optional<TimedAction> act(const Configuration& s) override;

 private:
  std::shared_ptr<const RegionSpace> space_;
  std::mt19937_64 rng_;
};

struct RunStep {
  Player owner = Player::Min;
  TimedAction tau;
  Configuration state;
};

struct Run {
  Configuration start;
  std::vector<RunStep> steps;
  std::optional<int> stop;
  ExtRational rt = ExtRational::infinity();
  Rational elapsed;
};

Run simulate(const TimedAutomaton& aut, const Configuration& s0, Policy& min_policy, Policy& max_policy,
             int max_steps);

std::string format_run(const Run& run, const TimedAutomaton& aut);

}  // namespace rtg
