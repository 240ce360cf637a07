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

#include "rtg/region.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rtg {

int ClockRegion::block_of(int clock) const {
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    if (has_clock(blocks[j], clock)) return j;
  }
  throw std::logic_error("clock missing from region blocks");
}

std::vector<int> ClockRegion::block_indices() const {
  std::vector<int> out(ints.size(), 0);
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    for (int c = 0; c < num_clocks(); ++c) {
      if (has_clock(blocks[j], c)) out[c] = j;
    }
  }
  return out;
}

std::vector<std::int64_t> ClockRegion::scaled_point() const {
  std::int64_t s = scale();
  std::vector<std::int64_t> out(ints.size());
  for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
    for (int c = 0; c < num_clocks(); ++c) {
      if (has_clock(blocks[j], c)) out[c] = ints[c] * s + j;
    }
  }
  return out;
}

Valuation ClockRegion::representative() const {
  auto scaled = scaled_point();
  Valuation v(scaled.size());
  for (std::size_t c = 0; c < scaled.size(); ++c) {
    v[c] = Rational(scaled[c], scale());
    v[c].canonicalize();
  }
  return v;
}

std::strong_ordering ClockRegion::operator<=>(const ClockRegion& other) const {
  if (auto c = ints <=> other.ints; c != 0) return c;
  return block_indices() <=> other.block_indices();
}

ClockRegion clock_region_of(const Valuation& v) {
  const int n = static_cast<int>(v.size());
  ClockRegion r;
  r.ints.resize(n);
  std::vector<std::pair<Rational, int>> fracs;
  fracs.reserve(n);
  r.blocks.push_back(0);
  for (int c = 0; c < n; ++c) {
    r.ints[c] = floor_int(v[c]);
    Rational f = v[c] - Rational(r.ints[c]);
    if (f == 0) {
      r.blocks[0] |= clock_bit(c);
    } else {
      fracs.emplace_back(std::move(f), c);
    }
  }
  std::sort(fracs.begin(), fracs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < fracs.size(); ++i) {
    if (i == 0 || fracs[i].first != fracs[i - 1].first) r.blocks.push_back(0);
    r.blocks.back() |= clock_bit(fracs[i].second);
  }
  return r;
}

Region region_of(const Configuration& s) { return Region{s.location, clock_region_of(s.valuation)}; }

namespace {

void enumerate_ints(const std::vector<int>& block_idx, std::int64_t k, int c, ClockRegion& current,
                    std::vector<ClockRegion>& out) {
  if (c == static_cast<int>(block_idx.size())) {
    out.push_back(current);
    return;
  }
  std::int64_t top = block_idx[c] == 0 ? k : k - 1;
  for (std::int64_t i = 0; i <= top; ++i) {
    current.ints[c] = i;
    enumerate_ints(block_idx, k, c + 1, current, out);
  }
}

}  // namespace

std::vector<ClockRegion> enumerate_clock_regions(int num_clocks, std::int64_t k) {
  if (num_clocks < 0 || num_clocks > kMaxClocks) throw std::invalid_argument("clock count out of range");
  std::vector<ClockRegion> out;
  std::vector<int> idx(num_clocks, 0);
  const int base = num_clocks + 1;
  std::int64_t total = 1;
  for (int i = 0; i < num_clocks; ++i) total *= base;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t rest = code;
    int m = 0;
    for (int c = 0; c < num_clocks; ++c) {
      idx[c] = static_cast<int>(rest % base);
      rest /= base;
      m = std::max(m, idx[c]);
    }
    std::vector<ClockSet> blocks(m + 1, 0);
    for (int c = 0; c < num_clocks; ++c) blocks[idx[c]] |= clock_bit(c);
    bool contiguous = true;
    for (int j = 1; j <= m; ++j) contiguous = contiguous && blocks[j] != 0;
    if (!contiguous) continue;
    ClockRegion r;
    r.ints.assign(num_clocks, 0);
    r.blocks = std::move(blocks);
    enumerate_ints(idx, k, 0, r, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClockRegion> geometric_successor(const ClockRegion& r, std::int64_t k) {
  if (r.num_clocks() == 0) return std::nullopt;
  ClockRegion next;
  next.ints = r.ints;
  if (r.is_thin()) {
    for (int c = 0; c < r.num_clocks(); ++c) {
      if (has_clock(r.blocks[0], c) && r.ints[c] >= k) return std::nullopt;
    }
    next.blocks.push_back(0);
    next.blocks.insert(next.blocks.end(), r.blocks.begin(), r.blocks.end());
    return next;
  }
  ClockSet top = r.blocks.back();
  next.blocks.push_back(top);
  next.blocks.insert(next.blocks.end(), r.blocks.begin() + 1, r.blocks.end() - 1);
  for (int c = 0; c < r.num_clocks(); ++c) {
    if (has_clock(top, c)) ++next.ints[c];
  }
  return next;
}

std::optional<std::pair<std::int64_t, int>> boundary_target(const ClockRegion& from,
                                                            const ClockRegion& target,
                                                            std::int64_t k) {
  if (!target.is_thin()) return std::nullopt;
  std::optional<ClockRegion> cur = from;
  while (cur) {
    if (*cur == target) {
      int c = std::countr_zero(target.blocks[0]);
      return std::make_pair(target.ints[c], c);
    }
    cur = geometric_successor(*cur, k);
  }
  return std::nullopt;
}

ClockRegion apply_reset(const ClockRegion& r, ClockSet reset) {
  ClockRegion out;
  out.ints = r.ints;
  out.blocks.push_back(r.blocks[0] | reset);
  for (std::size_t j = 1; j < r.blocks.size(); ++j) {
    ClockSet rest = r.blocks[j] & ~reset;
    if (rest) out.blocks.push_back(rest);
  }
  for (int c = 0; c < r.num_clocks(); ++c) {
    if (has_clock(reset, c)) out.ints[c] = 0;
  }
  return out;
}

bool region_satisfies(const ClockRegion& r, const Constraint& c) {
  return c.satisfied_scaled(r.scaled_point(), r.scale());
}

bool region_in_zone(const Region& r, const Zone& z) {
  const auto& c = z.per_location[r.location];
  return c.has_value() && region_satisfies(r.clocks, *c);
}

bool closure_contains(const ClockRegion& r, const Valuation& v) {
  if (static_cast<int>(v.size()) != r.num_clocks()) return false;
  std::vector<Rational> f(v.size());
  for (int c = 0; c < r.num_clocks(); ++c) {
    f[c] = v[c] - Rational(r.ints[c]);
    if (f[c] < 0 || f[c] > 1) return false;
  }
  Rational prev = 0;
  for (std::size_t j = 0; j < r.blocks.size(); ++j) {
    std::optional<Rational> level;
    for (int c = 0; c < r.num_clocks(); ++c) {
      if (!has_clock(r.blocks[j], c)) continue;
      if (!level) level = f[c];
      if (f[c] != *level) return false;
    }
    if (!level) continue;
    if (j == 0 && *level != 0) return false;
    if (*level < prev) return false;
    prev = *level;
  }
  return true;
}

Valuation sample_point(const ClockRegion& r, std::mt19937_64& rng) {
  const int m = r.num_frac_blocks();
  std::vector<std::int64_t> nums;
  std::int64_t den = 1;
  if (m > 0) {
    den = std::uniform_int_distribution<std::int64_t>(m + 1, 997)(rng);
    std::uniform_int_distribution<std::int64_t> pick(1, den - 1);
    while (static_cast<int>(nums.size()) < m) {
      std::int64_t x = pick(rng);
      if (std::find(nums.begin(), nums.end(), x) == nums.end()) nums.push_back(x);
    }
    std::sort(nums.begin(), nums.end());
  }
  Valuation v(r.num_clocks());
  for (int c = 0; c < r.num_clocks(); ++c) {
    int j = r.block_of(c);
    v[c] = Rational(r.ints[c]);
    if (j > 0) v[c] += Rational(nums[j - 1], den);
    v[c].canonicalize();
  }
  return v;
}

std::string format_region(const Region& r, const TimedAutomaton& aut) {
  std::string out = "loc=" + aut.locations[r.location].name + "; int=[";
  for (int c = 0; c < r.clocks.num_clocks(); ++c) {
    if (c) out += ",";
    out += aut.clocks[c] + ":" + std::to_string(r.clocks.ints[c]);
  }
  out += "]; frac=[";
  for (std::size_t j = 0; j < r.clocks.blocks.size(); ++j) {
    if (j) out += ",";
    out += "{";
    bool first = true;
    for (int c = 0; c < r.clocks.num_clocks(); ++c) {
      if (!has_clock(r.clocks.blocks[j], c)) continue;
      if (!first) out += ",";
      out += aut.clocks[c];
      first = false;
    }
    out += "}";
  }
  return out + "]";
}

RegionSpace::RegionSpace(const TimedAutomaton& aut) : aut_(aut) {
  auto clock_regions = enumerate_clock_regions(aut.num_clocks(), aut.k);
  for (int l = 0; l < aut.num_locations(); ++l) {
    for (const ClockRegion& cr : clock_regions) {
      Region r{l, cr};
      if (region_in_zone(r, aut.state)) {
        index_.emplace(r, static_cast<int>(regions_.size()));
        regions_.push_back(std::move(r));
      }
    }
  }
}

std::optional<int> RegionSpace::index_of(const Region& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RegionSpace::index_of(const Configuration& s) const {
  if (!aut_.in_bounds(s.valuation) || static_cast<int>(s.valuation.size()) != aut_.num_clocks()) {
    return std::nullopt;
  }
  return index_of(region_of(s));
}

std::optional<int> RegionSpace::time_successor(int index) const {
  const Region& r = regions_[index];
  auto next = geometric_successor(r.clocks, aut_.k);
  if (!next) return std::nullopt;
  return index_of(Region{r.location, *next});
}

std::optional<int> RegionSpace::discrete_succ(int index, int action) const {
  const Region& r = regions_[index];
  const Action& a = aut_.actions[action];
  if (!region_in_zone(r, a.enabled)) return std::nullopt;
  Region next{a.target[r.location], apply_reset(r.clocks, a.reset)};
  return index_of(next);
}

std::vector<int> RegionSpace::future_chain(int index) const {
  std::vector<int> chain{index};
  while (auto next = time_successor(chain.back())) chain.push_back(*next);
  return chain;
}

std::vector<int> RegionSpace::count_per_location() const {
  std::vector<int> counts(aut_.num_locations(), 0);
  for (const Region& r : regions_) ++counts[r.location];
  return counts;
}

}  // namespace rtg
