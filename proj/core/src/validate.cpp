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

#include "rtg/validate.hpp"

namespace rtg {

const char* to_string(ModelViolation::Kind k) {
  switch (k) {
    case ModelViolation::Kind::FinalOutsideState: return "FinalOutsideState";
    case ModelViolation::Kind::ConstantExceedsBound: return "ConstantExceedsBound";
    case ModelViolation::Kind::DeadlockRegion: return "DeadlockRegion";
    case ModelViolation::Kind::BadShape: return "BadShape";
  }
  return "?";
}

namespace {

std::vector<ModelViolation> static_checks(const TimedAutomaton& aut) {
  std::vector<ModelViolation> out;
  const int n = aut.num_locations();
  auto zone_ok = [&](const Zone& z) {
    return static_cast<int>(z.per_location.size()) == n;
  };
  if (aut.num_clocks() < 1 || aut.num_clocks() > kMaxClocks) {
    out.push_back({ModelViolation::Kind::BadShape, "clock count must be in 1.." + std::to_string(kMaxClocks)});
  }
  if (aut.k < 0) out.push_back({ModelViolation::Kind::BadShape, "k must be non-negative"});
  if (!zone_ok(aut.state) || !zone_ok(aut.final)) {
    out.push_back({ModelViolation::Kind::BadShape, "zones must cover every location"});
  }
  for (const Action& a : aut.actions) {
    if (!zone_ok(a.enabled) || static_cast<int>(a.target.size()) != n) {
      out.push_back({ModelViolation::Kind::BadShape, "action " + a.name + " does not cover every location"});
    }
  }
  if (!out.empty()) return out;

  auto check_zone = [&](const Zone& z, const std::string& what) {
    for (int l = 0; l < n; ++l) {
      if (!z.per_location[l]) continue;
      for (const Atom& atom : z.per_location[l]->atoms) {
        if (atom.constant > aut.k || atom.constant < 0) {
          out.push_back({ModelViolation::Kind::ConstantExceedsBound,
                         what + " at " + aut.locations[l].name + " uses constant " + std::to_string(atom.constant) +
                             " outside 0.." + std::to_string(aut.k)});
        }
      }
    }
  };
  check_zone(aut.state, "invariant");
  check_zone(aut.final, "final zone");
  for (const Action& a : aut.actions) check_zone(a.enabled, "guard of " + a.name);

  auto clock_regions = enumerate_clock_regions(aut.num_clocks(), aut.k);
  for (int l = 0; l < n; ++l) {
    for (const ClockRegion& cr : clock_regions) {
      Region r{l, cr};
      if (region_in_zone(r, aut.final) && !region_in_zone(r, aut.state)) {
        out.push_back({ModelViolation::Kind::FinalOutsideState, format_region(r, aut)});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ModelViolation> validate(const TimedAutomaton& aut, const RegionGraph& g) {
  auto out = static_checks(aut);
  for (int r = 0; r < g.size(); ++r) {
    if (!g.is_final(r) && g.moves(r).empty()) {
      out.push_back({ModelViolation::Kind::DeadlockRegion, g.space().format(r)});
    }
  }
  return out;
}

std::vector<ModelViolation> validate(const TimedAutomaton& aut) {
  auto out = static_checks(aut);
  if (!out.empty()) return out;
  return validate(aut, build(aut));
}

}  // namespace rtg
