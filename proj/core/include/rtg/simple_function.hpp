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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rtg/rational.hpp"
#include "rtg/region.hpp"
#include "rtg/timed_automaton.hpp"

namespace rtg {

// e, e - s(c), or +infinity, as a function on the closure of a region.
struct SimpleFunction {
  enum class Kind { Constant, MinusClock, Infinite };

  Kind kind = Kind::Infinite;
  std::int64_t e = 0;
  int clock = -1;

  static SimpleFunction constant(std::int64_t e) { return {Kind::Constant, e, -1}; }
  static SimpleFunction minus_clock(std::int64_t e, int c) { return {Kind::MinusClock, e, c}; }
  static SimpleFunction infinite() { return {Kind::Infinite, 0, -1}; }

  bool is_infinite() const { return kind == Kind::Infinite; }
  bool operator==(const SimpleFunction&) const = default;
};

// Either (a, b, c): wait until clock c reaches b then take a; or a taken without waiting.
struct SimpleTimedAction {
  int action = 0;
  bool immediate = false;
  std::int64_t b = 0;
  int clock = -1;

  static SimpleTimedAction boundary(int a, std::int64_t b, int c) { return {a, false, b, c}; }
  static SimpleTimedAction now(int a) { return {a, true, 0, -1}; }

  bool operator==(const SimpleTimedAction&) const = default;
};

class NatInf {
 public:
  NatInf() = default;
  explicit NatInf(std::uint64_t n) : value_(n) {}
  static NatInf infinity() {
    NatInf d;
    d.infinite_ = true;
    return d;
  }

  bool is_infinite() const { return infinite_; }
  std::uint64_t value() const { return value_; }

  bool operator==(const NatInf& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  std::strong_ordering operator<=>(const NatInf& o) const {
    if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
    return value_ <=> o.value_;
  }

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

NatInf bump(NatInf d);
std::string to_string(NatInf d);

Rational wait_time(const Valuation& v, const SimpleTimedAction& alpha);
// Valuation after waiting wait_time and applying the action's reset.
Valuation simple_successor(const Valuation& v, const SimpleTimedAction& alpha, ClockSet reset);

ExtRational eval(const SimpleFunction& f, const Valuation& v);

// Canonical form of f on the closure of r: clocks with constant value collapse to
// constants, and the clock of a MinusClock is the lowest-numbered clock of its block.
// Two normalized functions agree on r iff they are equal.
SimpleFunction normalize(const SimpleFunction& f, const ClockRegion& r);

// s |-> wait_time(s, alpha) + f(Succ(s, alpha)) on the closure of source, normalized.
SimpleFunction transfer(const SimpleFunction& f, const SimpleTimedAction& alpha, ClockSet reset,
                        const ClockRegion& source);

// Pointwise order on the open region, uniform by construction.
std::strong_ordering compare_on_region(const SimpleFunction& f, const SimpleFunction& g,
                                       const ClockRegion& r);

std::strong_ordering lex_compare(const SimpleFunction& f, NatInf d, const SimpleFunction& g, NatInf e,
                                 const ClockRegion& r);

std::string to_string(const SimpleFunction& f, const std::vector<std::string>& clock_names);

}  // namespace rtg
