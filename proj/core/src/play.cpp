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

#include "rtg/play.hpp"

#include <algorithm>

namespace rtg {

Rational EpsilonSchedule::budget(NatInf d) const {
  if (uniform_bound) return *uniform_bound == 0 ? epsilon : Rational(epsilon / Rational(*uniform_bound));
  std::uint64_t exponent = d.is_infinite() ? 1 : d.value();
  mpz_class pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), 2, exponent);
  Rational out = epsilon / Rational(pow);
  out.canonicalize();
  return out;
}

EpsilonSchedule geometric_schedule(const Rational& epsilon) { return {epsilon, std::nullopt}; }

EpsilonSchedule bounded_epsilon_schedule(const RegionalValue& v, std::uint64_t B, const Rational& epsilon) {
  for (const NatInf& d : v.D) {
    if (!d.is_infinite() && d.value() > B) {
      throw BExceeded("finite D=" + std::to_string(d.value()) + " exceeds B=" + std::to_string(B));
    }
  }
  return {epsilon, B};
}

ConcreteStrategy::ConcreteStrategy(std::shared_ptr<const RegionGraph> g, RegionalValue v, PositionalStrategy sigma,
                                   EpsilonSchedule schedule)
    : g_(std::move(g)), v_(std::move(v)), sigma_(std::move(sigma)), schedule_(std::move(schedule)) {}

namespace {

// Fractional parts of the positive-fraction clocks at valuation p.
std::vector<Rational> positive_fracs(const Valuation& p) {
  std::vector<Rational> out;
  for (const Rational& x : p) {
    Rational f = x - Rational(floor_int(x));
    if (f > 0) out.push_back(f);
  }
  return out;
}

}  // namespace

std::optional<TimedAction> ConcreteStrategy::act(const Configuration& s) {
  auto r = g_->space().index_of(s);
  if (!r || *r >= static_cast<int>(sigma_.size()) || sigma_[*r] < 0) return std::nullopt;
  const Move& m = g_->moves(*r)[sigma_[*r]];
  Rational w = wait_time(s.valuation, m.alpha);
  if (m.kind == MoveKind::ThinHit || m.kind == MoveKind::ImmediateInterior) return TimedAction{m.alpha.action, w};

  Rational eps = schedule_.budget(v_.D[*r]);
  Valuation p = advance(s.valuation, w);
  auto fracs = positive_fracs(p);
  Rational delta;
  if (m.kind == MoveKind::MinAfterBoundary) {
    // Time left in the thick region entered at the boundary point.
    Rational span = fracs.empty() ? Rational(1) : Rational(1 - *std::max_element(fracs.begin(), fracs.end()));
    delta = std::min(eps, Rational(span / 2));
    return TimedAction{m.alpha.action, Rational(w + delta)};
  }
  Rational span = fracs.empty() ? Rational(1) : *std::min_element(fracs.begin(), fracs.end());
  span = std::min(span, w);
  delta = std::min(eps, Rational(span / 2));
  return TimedAction{m.alpha.action, Rational(w - delta)};
}

ConcreteStrategy concretize(std::shared_ptr<const RegionGraph> g, const RegionalValue& v,
                            const PositionalStrategy& sigma, const EpsilonSchedule& schedule, Player side) {
  PositionalStrategy owned(sigma.size(), -1);
  for (std::size_t r = 0; r < sigma.size(); ++r) {
    if (g->owner(static_cast<int>(r)) == side) owned[r] = sigma[r];
  }
  return ConcreteStrategy(std::move(g), v, std::move(owned), schedule);
}

std::vector<LegalWindow> legal_windows(const RegionSpace& space, const Configuration& s) {
  const TimedAutomaton& aut = space.automaton();
  std::vector<LegalWindow> out;
  if (!aut.in_state(s)) return out;
  Rational horizon = aut.k;
  for (const Rational& x : s.valuation) horizon = std::min(horizon, Rational(aut.k - x));
  std::vector<Rational> events{Rational(0)};
  for (const Rational& x : s.valuation) {
    for (std::int64_t n = floor_int(x) + 1; n <= aut.k; ++n) {
      Rational t = n - x;
      if (t <= horizon) events.push_back(t);
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  auto try_segment = [&](const Rational& lo, const Rational& hi) {
    Rational probe = (lo + hi) / 2;
    Configuration mid{s.location, advance(s.valuation, probe)};
    if (!aut.in_state(mid)) return false;
    for (int a = 0; a < aut.num_actions(); ++a) {
      if (discrete_succ(mid, a, aut)) out.push_back({a, lo, hi});
    }
    return true;
  };
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (!try_segment(events[i], events[i])) break;
    if (i + 1 < events.size() && !try_segment(events[i], events[i + 1])) break;
  }
  return out;
}

Rational random_delay(const LegalWindow& w, std::mt19937_64& rng) {
  if (w.is_point()) return w.lo;
  std::int64_t q = std::uniform_int_distribution<std::int64_t>(2, 1000)(rng);
  std::int64_t j = std::uniform_int_distribution<std::int64_t>(1, q - 1)(rng);
  Rational t = w.lo + (w.hi - w.lo) * Rational(j, q);
  t.canonicalize();
  return t;
}

std::optional<TimedAction> RandomPolicy::act(const Configuration& s) {
  auto windows = legal_windows(*space_, s);
  if (windows.empty()) return std::nullopt;
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, windows.size() - 1)(rng_);
  return TimedAction{windows[pick].action, random_delay(windows[pick], rng_)};
}

Run simulate(const TimedAutomaton& aut, const Configuration& s0, Policy& min_policy, Policy& max_policy,
             int max_steps) {
  if (!aut.in_state(s0)) throw StuckState("start configuration is outside the state zone");
  Run run;
  run.start = s0;
  run.elapsed = 0;
  Configuration s = s0;
  if (aut.in_final(s)) {
    run.stop = 0;
    run.rt = ExtRational(Rational(0));
    return run;
  }
  for (int i = 0; i < max_steps; ++i) {
    Player owner = aut.locations[s.location].owner;
    auto tau = (owner == Player::Min ? min_policy : max_policy).act(s);
    if (!tau) throw StuckState("no action at " + format_configuration(s, aut));
    StepResult next = timed_succ(s, *tau, aut);
    if (!next) {
      throw StuckState(std::string("illegal action ") + aut.actions[tau->action].name + " with t=" +
                       to_string(tau->delay) + " at " + format_configuration(s, aut) + ": " + to_string(next.error));
    }
    s = *next.config;
    run.elapsed += tau->delay;
    run.steps.push_back({owner, *tau, s});
    if (aut.in_final(s)) {
      run.stop = i + 1;
      run.rt = ExtRational(run.elapsed);
      break;
    }
  }
  return run;
}

std::string format_run(const Run& run, const TimedAutomaton& aut) {
  std::string out;
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const RunStep& st = run.steps[i];
    out += std::to_string(i + 1) + " | " + to_string(st.owner) + " | " + aut.actions[st.tau.action].name +
           " | t=" + to_string(st.tau.delay) + " | state=" + format_configuration(st.state, aut) + "\n";
  }
  out += "RT=" + to_string(run.rt) + " stop=" + (run.stop ? std::to_string(*run.stop) : std::string("none")) + "\n";
  return out;
}

}  // namespace rtg
