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

#include <benchmark/benchmark.h>

#include "rtg/countdown.hpp"
#include "rtg/region.hpp"
#include "rtg/region_graph.hpp"
#include "rtg/solver.hpp"
#include "rtg/verify.hpp"

namespace {

void BM_EnumerateClockRegions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::int64_t k = state.range(1);
  std::size_t count = 0;
  for (auto _ : state) {
    auto rs = rtg::enumerate_clock_regions(n, k);
    count = rs.size();
    benchmark::DoNotOptimize(rs);
  }
  state.counters["regions"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateClockRegions)->Args({1, 4})->Args({2, 2})->Args({2, 4})->Args({3, 1})->Args({3, 2});

rtg::TimedAutomaton countdown_ta(std::int64_t b0) {
  return rtg::reduce_to_ta(rtg::gen_random_countdown(7, 5, b0, 4));
}

void BM_BuildGraph(benchmark::State& state) {
  auto aut = countdown_ta(state.range(0));
  std::size_t regions = 0;
  for (auto _ : state) {
    rtg::RegionGraph g = rtg::build(aut);
    regions = g.size();
    benchmark::DoNotOptimize(g);
  }
  state.counters["regions"] = static_cast<double>(regions);
}
BENCHMARK(BM_BuildGraph)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SolveMinMax(benchmark::State& state) {
  rtg::RegionGraph g = rtg::build(countdown_ta(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rtg::solve_minmax(g));
  state.counters["regions"] = g.size();
}
BENCHMARK(BM_SolveMinMax)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ValueIteration(benchmark::State& state) {
  rtg::RegionGraph g = rtg::build(countdown_ta(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rtg::value_iteration_oracle(g));
  state.counters["regions"] = g.size();
}
BENCHMARK(BM_ValueIteration)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyOpt(benchmark::State& state) {
  rtg::RegionGraph g = rtg::build(countdown_ta(state.range(0)));
  auto sol = rtg::solve_minmax(g);
  for (auto _ : state) benchmark::DoNotOptimize(rtg::verify_opt(sol.value, g, rtg::OptMode::MinMax));
}
BENCHMARK(BM_VerifyOpt)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
