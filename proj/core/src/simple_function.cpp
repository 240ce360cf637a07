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

#include "rtg/simple_function.hpp"

#include <bit>

namespace rtg {

NatInf bump(NatInf d) { return d.is_infinite() ? d : NatInf(d.value() + 1); }

std::string to_string(NatInf d) { return d.is_infinite() ? "inf" : std::to_string(d.value()); }

Rational wait_time(const Valuation& v, const SimpleTimedAction& alpha) {
  if (alpha.immediate) return Rational(0);
  Rational t = Rational(alpha.b) - v[alpha.clock];
  return t > 0 ? t : Rational(0);
}

Valuation simple_successor(const Valuation& v, const SimpleTimedAction& alpha, ClockSet reset) {
  return reset_clocks(advance(v, wait_time(v, alpha)), reset);
}

ExtRational eval(const SimpleFunction& f, const Valuation& v) {
  switch (f.kind) {
    case SimpleFunction::Kind::Constant: return ExtRational(Rational(f.e));
    case SimpleFunction::Kind::MinusClock: return ExtRational(Rational(Rational(f.e) - v[f.clock]));
    case SimpleFunction::Kind::Infinite: break;
  }
  return ExtRational::infinity();
}

SimpleFunction normalize(const SimpleFunction& f, const ClockRegion& r) {
  if (f.kind != SimpleFunction::Kind::MinusClock) return f;
  int j = r.block_of(f.clock);
  if (j == 0) return SimpleFunction::constant(f.e - r.ints[f.clock]);
  int lead = std::countr_zero(r.blocks[j]);
  return SimpleFunction::minus_clock(f.e - r.ints[f.clock] + r.ints[lead], lead);
}

SimpleFunction transfer(const SimpleFunction& f, const SimpleTimedAction& alpha, ClockSet reset,
                        const ClockRegion& source) {
  if (f.is_infinite()) return f;
  bool waits = false;
  if (!alpha.immediate) {
    std::int64_t i = source.ints[alpha.clock];
    bool integral = has_clock(source.blocks[0], alpha.clock);
    waits = i < alpha.b || (i == alpha.b && integral);
  }
  SimpleFunction out = f;
  if (waits) {
    // (b - s(c)) + F(s + b - s(c) with resets applied)
    if (f.kind == SimpleFunction::Kind::Constant || has_clock(reset, f.clock)) {
      out = SimpleFunction::minus_clock(alpha.b + f.e, alpha.clock);
    }
  } else if (f.kind == SimpleFunction::Kind::MinusClock && has_clock(reset, f.clock)) {
    out = SimpleFunction::constant(f.e);
  }
  return normalize(out, source);
}

namespace {

std::int64_t scaled_value(const SimpleFunction& f, const std::vector<std::int64_t>& point,
                          std::int64_t scale) {
  if (f.kind == SimpleFunction::Kind::Constant) return f.e * scale;
  return f.e * scale - point[f.clock];
}

}  // namespace

std::strong_ordering compare_on_region(const SimpleFunction& f, const SimpleFunction& g,
                                       const ClockRegion& r) {
  if (f.is_infinite() || g.is_infinite()) return f.is_infinite() <=> g.is_infinite();
  auto point = r.scaled_point();
  return scaled_value(f, point, r.scale()) <=> scaled_value(g, point, r.scale());
}

std::strong_ordering lex_compare(const SimpleFunction& f, NatInf d, const SimpleFunction& g, NatInf e,
                                 const ClockRegion& r) {
  if (auto c = compare_on_region(f, g, r); c != 0) return c;
  return d <=> e;
}

std::string to_string(const SimpleFunction& f, const std::vector<std::string>& clock_names) {
  switch (f.kind) {
    case SimpleFunction::Kind::Constant: return "const " + std::to_string(f.e);
    case SimpleFunction::Kind::MinusClock: return std::to_string(f.e) + " - " + clock_names[f.clock];
    case SimpleFunction::Kind::Infinite: break;
  }
  return "inf";
}

}  // namespace rtg
