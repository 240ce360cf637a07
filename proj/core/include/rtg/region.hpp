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
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rtg/timed_automaton.hpp"

namespace rtg {

// Clock region: integer parts plus the ordered partition of clocks by fractional part.
// blocks[0] holds the clocks with zero fractional part (possibly empty); blocks[1..m]
// are nonempty and ordered by strictly increasing positive fractional part.
struct ClockRegion {
  std::vector<std::int64_t> ints;
  std::vector<ClockSet> blocks;

  int num_clocks() const { return static_cast<int>(ints.size()); }
  int num_frac_blocks() const { return static_cast<int>(blocks.size()) - 1; }
  bool is_thin() const { return blocks[0] != 0; }
  int block_of(int clock) const;
  std::vector<int> block_indices() const;

  // Integer coordinates of the representative scaled by scale() = m + 1.
  std::int64_t scale() const { return num_frac_blocks() + 1; }
  std::vector<std::int64_t> scaled_point() const;
  Valuation representative() const;

  bool operator==(const ClockRegion&) const = default;
  std::strong_ordering operator<=>(const ClockRegion& other) const;
};

struct Region {
  int location = 0;
  ClockRegion clocks;

  bool operator==(const Region&) const = default;
  std::strong_ordering operator<=>(const Region& other) const {
    if (auto c = location <=> other.location; c != 0) return c;
    return clocks <=> other.clocks;
  }
};

ClockRegion clock_region_of(const Valuation& v);
Region region_of(const Configuration& s);

// All clock regions over num_clocks clocks bounded by k, in canonical order.
std::vector<ClockRegion> enumerate_clock_regions(int num_clocks, std::int64_t k);

// Time successor ignoring any state zone; nullopt when some clock sits at k.
std::optional<ClockRegion> geometric_successor(const ClockRegion& r, std::int64_t k);

// (b, c) such that every s in `from` reaches `target` after waiting b - s(c);
// target must be thin and lie in the time-successor chain of `from` (reflexive).
std::optional<std::pair<std::int64_t, int>> boundary_target(const ClockRegion& from,
                                                            const ClockRegion& target,
                                                            std::int64_t k);

ClockRegion apply_reset(const ClockRegion& r, ClockSet reset);

bool region_satisfies(const ClockRegion& r, const Constraint& c);
bool region_in_zone(const Region& r, const Zone& z);
bool closure_contains(const ClockRegion& r, const Valuation& v);

// Uniformly seeded interior point of the region with small random denominators.
Valuation sample_point(const ClockRegion& r, std::mt19937_64& rng);

std::string format_region(const Region& r, const TimedAutomaton& aut);

// The regions intersecting the state zone S, indexed in canonical order.
class RegionSpace {
 public:
  explicit RegionSpace(const TimedAutomaton& aut);

  const TimedAutomaton& automaton() const { return aut_; }
  int size() const { return static_cast<int>(regions_.size()); }
  const Region& region(int index) const { return regions_[index]; }
  const std::vector<Region>& regions() const { return regions_; }
  std::optional<int> index_of(const Region& r) const;
  std::optional<int> index_of(const Configuration& s) const;

  bool is_thin(int index) const { return regions_[index].clocks.is_thin(); }
  Player owner(int index) const { return aut_.locations[regions_[index].location].owner; }
  bool is_final(int index) const { return region_in_zone(regions_[index], aut_.final); }

  // Time successor staying inside S.
  std::optional<int> time_successor(int index) const;
  // Region reached by taking action a from every state of the region; nullopt when
  // the region is not inside E(a) or the successor leaves S.
  std::optional<int> discrete_succ(int index, int action) const;
  // Time-successor chain starting at index (inclusive) while it stays in S.
  std::vector<int> future_chain(int index) const;

  std::string format(int index) const { return format_region(regions_[index], aut_); }
  std::vector<int> count_per_location() const;

 private:
  TimedAutomaton aut_;
  std::vector<Region> regions_;
  std::map<Region, int> index_;
};

}  // namespace rtg
