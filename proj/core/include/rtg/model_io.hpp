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

#include <string>
#include <string_view>
#include <vector>

#include "rtg/model.hpp"
#include "rtg/region_graph.hpp"
#include "rtg/simple_function.hpp"
#include "rtg/solver.hpp"

namespace rtg {

// Reads `inf`, `const <e>` or `<e> - <clock>`.
SimpleFunction parse_simple_function(std::string_view text, const std::vector<std::string>& clocks);
NatInf parse_natinf(std::string_view text);

// Reads the T and D columns of a solve dump; every region of g must appear exactly once.
RegionalValue parse_solution(std::string_view text, const RegionGraph& g);

// Parses "loc,v1,v2,..." into a configuration.
Configuration parse_configuration(std::string_view text, const TimedAutomaton& aut);

}  // namespace rtg
