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

#include <random>

#include "doctest.h"
#include "rtg/region_graph.hpp"
#include "rtg/simple_function.hpp"
#include "support/testing.hpp"

namespace rtg {
namespace {

Rational q(const char* s) { return parse_rational(s); }

const ClockSet X = clock_bit(0);
const ClockSet Y = clock_bit(1);
const ClockRegion kOpen{{0}, {0, X}};

SimpleFunction random_function(std::mt19937_64& rng, int clocks, std::int64_t k) {
  std::int64_t e = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * k + 3));
  switch (rng() % 5) {
    case 0: return SimpleFunction::infinite();
    case 1:
    case 2: return SimpleFunction::constant(e);
    default: return SimpleFunction::minus_clock(e, static_cast<int>(rng() % clocks));
  }
}

TEST_CASE("wait_time") {
  CHECK(wait_time({q("2/5")}, SimpleTimedAction::boundary(0, 1, 0)) == q("3/5"));
  CHECK(wait_time({q("2/5")}, SimpleTimedAction::boundary(0, 0, 0)) == 0);
  CHECK(wait_time({q("2/5")}, SimpleTimedAction::now(0)) == 0);
}

TEST_CASE("eval") {
  CHECK(eval(SimpleFunction::minus_clock(1, 0), {q("1/4")}) == ExtRational(q("3/4")));
  CHECK(eval(SimpleFunction::constant(2), {q("1/4")}) == ExtRational(2));
  CHECK(eval(SimpleFunction::infinite(), {q("1/4")}).is_infinite());
}

TEST_CASE("transfer") {
  auto wait = SimpleTimedAction::boundary(0, 1, 0);
  CHECK(transfer(SimpleFunction::constant(2), wait, 0, kOpen) == SimpleFunction::minus_clock(3, 0));

  ClockRegion two{{0, 0}, {0, X, Y}};
  CHECK(transfer(SimpleFunction::minus_clock(2, 1), SimpleTimedAction::boundary(0, 1, 1), 0, two) ==
        SimpleFunction::minus_clock(2, 1));
  CHECK(transfer(SimpleFunction::minus_clock(2, 0), SimpleTimedAction::now(0), X, two) ==
        SimpleFunction::constant(2));
  CHECK(transfer(SimpleFunction::infinite(), wait, 0, kOpen) == SimpleFunction::infinite());
}

TEST_CASE("normal form") {
  ClockRegion zero{{0}, {X}};
  CHECK(normalize(SimpleFunction::minus_clock(1, 0), zero) == SimpleFunction::constant(1));
  ClockRegion together{{0, 0}, {0, X | Y}};
  CHECK(normalize(SimpleFunction::minus_clock(1, 1), together) == SimpleFunction::minus_clock(1, 0));
  ClockRegion apart{{0, 1}, {0, X | Y}};
  CHECK(normalize(SimpleFunction::minus_clock(2, 1), apart) == SimpleFunction::minus_clock(1, 0));
}

TEST_CASE("bump") {
  CHECK(bump(NatInf(0)) == NatInf(1));
  CHECK(bump(NatInf(7)) == NatInf(8));
  CHECK(bump(NatInf::infinity()).is_infinite());
}

TEST_CASE("compare_on_region") {
  CHECK(compare_on_region(SimpleFunction::constant(1), SimpleFunction::minus_clock(1, 0), kOpen) ==
        std::strong_ordering::greater);
  ClockRegion x_first{{0, 0}, {0, X, Y}};
  CHECK(compare_on_region(SimpleFunction::minus_clock(2, 0), SimpleFunction::minus_clock(1, 1), x_first) ==
        std::strong_ordering::greater);
  ClockRegion together{{0, 0}, {0, X | Y}};
  CHECK(compare_on_region(SimpleFunction::minus_clock(1, 0), SimpleFunction::minus_clock(1, 1), together) ==
        std::strong_ordering::equal);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Valuation v = sample_point(together, rng);
    CHECK(eval(SimpleFunction::minus_clock(1, 0), v) == eval(SimpleFunction::minus_clock(1, 1), v));
  }
  CHECK(compare_on_region(SimpleFunction::infinite(), SimpleFunction::constant(1000000), kOpen) ==
        std::strong_ordering::greater);
}

TEST_CASE("lex_compare") {
  auto c1 = SimpleFunction::constant(1);
  CHECK(lex_compare(c1, NatInf(3), c1, NatInf(5), kOpen) == std::strong_ordering::less);
  CHECK(lex_compare(SimpleFunction::constant(0), NatInf(9), c1, NatInf(0), kOpen) == std::strong_ordering::less);
  CHECK(lex_compare(SimpleFunction::infinite(), NatInf::infinity(), SimpleFunction::constant(1000000), NatInf(1),
                    kOpen) == std::strong_ordering::greater);
}

TEST_CASE("symbolic comparison agrees with sampled points") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& r : enumerate_clock_regions(n, 2)) {
      for (int i = 0; i < 10; ++i) {
        auto f = random_function(rng, n, 2);
        auto g = random_function(rng, n, 2);
        auto cmp = compare_on_region(f, g, r);
        bool equal_forms = normalize(f, r) == normalize(g, r);
        CHECK(equal_forms == (cmp == std::strong_ordering::equal));
        for (int j = 0; j < 20; ++j) {
          Valuation v = sample_point(r, rng);
          CHECK((eval(f, v) <=> eval(g, v)) == cmp);
        }
      }
    }
  }
}

TEST_CASE("transfer agrees with pointwise arithmetic on corpus moves") {
  std::mt19937_64 rng(29);
  for (const auto& path : testing::corpus_files()) {
    auto aut = testing::load(path);
    RegionGraph g = build(aut);
    for (int r = 0; r < g.size(); ++r) {
      const ClockRegion& src = g.space().region(r).clocks;
      for (const Move& m : g.moves(r)) {
        ClockSet reset = aut.actions[m.alpha.action].reset;
        for (int i = 0; i < 5; ++i) {
          auto f = random_function(rng, aut.num_clocks(), aut.k);
          auto tf = transfer(f, m.alpha, reset, src);
          for (int j = 0; j < 4; ++j) {
            Valuation v = j == 0 ? src.representative() : sample_point(src, rng);
            ExtRational direct = ExtRational(wait_time(v, m.alpha)) + eval(f, simple_successor(v, m.alpha, reset));
            CHECK(eval(tf, v) == direct);
          }
        }
      }
    }
  }
}

TEST_CASE("time profile through one region is nondecreasing") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
    Valuation s = testing::random_valuation(rng, n, k, 7);
    // Delays at which some clock crosses an integer.
    std::vector<Rational> events{0};
    for (const auto& x : s) {
      for (std::int64_t i = floor_int(x) + 1; i <= k; ++i) events.push_back(Rational(i) - x);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    if (events.size() < 2) continue;
    std::size_t at = rng() % (events.size() - 1);
    Rational lo = events[at];
    Rational hi = events[at + 1];
    ClockSet reset = static_cast<ClockSet>(rng() % (1u << n));
    auto f = random_function(rng, n, k);
    ExtRational prev;
    for (int i = 0; i <= 10; ++i) {
      Rational t = lo + (hi - lo) * Rational(i, 10);
      Valuation after = reset_clocks(rtg::advance(s, t), reset);
      ExtRational value = ExtRational(t) + eval(f, after);
      if (i > 0) CHECK(prev <= value);
      prev = value;
    }
  }
}

TEST_CASE("serialization") {
  std::vector<std::string> names{"x", "y"};
  CHECK(to_string(SimpleFunction::infinite(), names) == "inf");
  CHECK(to_string(SimpleFunction::constant(3), names) == "const 3");
  CHECK(to_string(SimpleFunction::minus_clock(2, 1), names) == "2 - y");
  CHECK(to_string(NatInf(4)) == "4");
  CHECK(to_string(NatInf::infinity()) == "inf");
}

}  // namespace
}  // namespace rtg
