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
#include "rtg/model.hpp"
#include "rtg/rational.hpp"
#include "rtg/region.hpp"
#include "rtg/timed_automaton.hpp"
#include "support/testing.hpp"

namespace rtg {
namespace {

Rational q(const char* s) { return parse_rational(s); }

const char* kA0 =
    "rtg-ta 1\n"
    "clocks x\n"
    "k 1\n"
    "location l min\n"
    "location g min\n"
    "edge l a g\n"
    "final g\n";

const char* kTwoClocks =
    "rtg-ta 1\n"
    "clocks x y\n"
    "k 1\n"
    "location l min\n"
    "location g min\n"
    "edge l a g reset x\n"
    "edge l b g guard x = 1\n"
    "edge l c l\n"
    "final g\n";

TEST_CASE("rationals print in lowest terms and round-trip") {
  CHECK(to_string(q("2/4")) == "1/2");
  CHECK(to_string(q("6/3")) == "2");
  CHECK(to_string(q("-3/9")) == "-1/3");
  CHECK(to_string(q("0")) == "0");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Rational r(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    r.canonicalize();
    CHECK(parse_rational(to_string(r)) == r);
  }
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(floor_int(q("-1/2")) == -1);
  CHECK(floor_int(q("7/2")) == 3);
}

TEST_CASE("extended rationals treat infinity as top and absorbing") {
  ExtRational inf = ExtRational::infinity();
  CHECK(inf > ExtRational(q("1000000")));
  CHECK((inf + ExtRational(q("1"))).is_infinite());
  CHECK(ExtRational(q("1/2")) + ExtRational(q("1/3")) == ExtRational(q("5/6")));
  CHECK(to_string(inf) == "inf");
}

TEST_CASE("delay") {
  auto aut = parse_automaton(kA0);
  Configuration s{0, {q("1/4")}};
  auto r = delay(s, q("1/2"), aut);
  REQUIRE(r.config);
  CHECK(r.config->valuation[0] == q("3/4"));
  CHECK(delay(s, 0, aut).config == s);
  CHECK(delay(Configuration{0, {q("1/2")}}, q("3/4"), aut).error == StepError::ExceedsBound);
}

TEST_CASE("delay reports leaving the state zone") {
  auto aut = parse_automaton(
      "rtg-ta 1\nclocks x\nk 2\nlocation l max invariant x <= 1\nlocation g min\nedge l a g\nfinal g\n");
  Configuration s{0, {q("1/2")}};
  CHECK(delay(s, q("1/2"), aut).config);
  CHECK(delay(s, q("3/4"), aut).error == StepError::LeavesStateZone);
}

TEST_CASE("discrete successor") {
  auto aut = parse_automaton(kTwoClocks);
  Configuration s{0, {q("2/3"), q("1/3")}};
  auto r = discrete_succ(s, 0, aut);
  REQUIRE(r.config);
  CHECK(r.config->location == 1);
  CHECK(r.config->valuation == Valuation{0, q("1/3")});
  CHECK(discrete_succ(Configuration{0, {q("1/2"), 0}}, 1, aut).error == StepError::NotEnabled);
  auto loop = discrete_succ(s, 2, aut);
  REQUIRE(loop.config);
  CHECK(loop.config->valuation == s.valuation);
  // Actions belong to their source location only.
  CHECK(discrete_succ(Configuration{1, s.valuation}, 0, aut).error == StepError::NotEnabled);
}

TEST_CASE("discrete successor checks S on both ends") {
  auto aut = parse_automaton(
      "rtg-ta 1\nclocks x\nk 2\nlocation l min\nlocation m min invariant x <= 1\n"
      "edge l a m\nedge m b l\nfinal l\n");
  CHECK(discrete_succ(Configuration{0, {q("3/2")}}, 0, aut).error == StepError::SuccessorNotInS);
  CHECK(discrete_succ(Configuration{1, {q("3/2")}}, 1, aut).error == StepError::SourceNotInS);
}

TEST_CASE("timed successor") {
  auto aut = parse_automaton(kA0);
  Configuration s{0, {q("1/4")}};
  auto r = timed_succ(s, {0, q("1/2")}, aut);
  REQUIRE(r.config);
  CHECK(*r.config == Configuration{1, {q("3/4")}});
  CHECK(timed_succ(s, {0, 0}, aut).config == Configuration{1, {q("1/4")}});
  CHECK(timed_succ(s, {0, 1}, aut).error == StepError::ExceedsBound);
  CHECK(format_configuration(*r.config, aut) == "g,(3/4)");
}

TEST_CASE("reset is idempotent and delay is additive") {
  auto aut = parse_automaton(kTwoClocks);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Valuation v = testing::random_valuation(rng, 2, 1, 12);
    Valuation once = reset_clocks(v, clock_bit(0));
    CHECK(reset_clocks(once, clock_bit(0)) == once);
    CHECK(once[0] == 0);
    CHECK(once[1] == v[1]);

    Configuration s{0, v};
    Rational t1(static_cast<long>(rng() % 5), 8);
    Rational t2(static_cast<long>(rng() % 5), 8);
    t1.canonicalize();
    t2.canonicalize();
    auto a = delay(s, t1, aut);
    if (!a) continue;
    auto b = delay(*a.config, t2, aut);
    auto c = delay(s, t1 + t2, aut);
    CHECK(b.config.has_value() == c.config.has_value());
    if (b) CHECK(*b.config == *c.config);
  }
}

TEST_CASE("zone membership is constant on regions") {
  std::mt19937_64 rng(3);
  for (const auto& path : testing::corpus_files()) {
    auto aut = testing::load(path);
    const int n = aut.num_clocks();
    for (int i = 0; i < 300; ++i) {
      Valuation v = testing::random_valuation(rng, n, aut.k, 4);
      Valuation w = sample_point(clock_region_of(v), rng);
      REQUIRE(clock_region_of(w) == clock_region_of(v));
      for (int l = 0; l < aut.num_locations(); ++l) {
        CHECK(aut.state.contains(l, v) == aut.state.contains(l, w));
        CHECK(aut.final.contains(l, v) == aut.final.contains(l, w));
        for (const auto& act : aut.actions) CHECK(act.enabled.contains(l, v) == act.enabled.contains(l, w));
      }
    }
  }
}

}  // namespace
}  // namespace rtg
