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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rtg/timed_automaton.hpp"

namespace rtg {

// Textual model ("rtg-ta 1"): locations with owners and invariants, edges with
// guards and resets, and per-location final constraints.
struct ModelLocation {
  std::string name;
  Player owner = Player::Min;
  Constraint invariant;

  bool operator==(const ModelLocation&) const = default;
};

struct ModelEdge {
  std::string source;
  std::string label;
  std::string target;
  Constraint guard;
  std::vector<std::string> resets;

  bool operator==(const ModelEdge&) const = default;
};

struct ModelFinal {
  std::string location;
  Constraint constraint;

  bool operator==(const ModelFinal&) const = default;
};

struct ModelFile {
  std::vector<std::string> clocks;
  std::int64_t k = 0;
  std::vector<ModelLocation> locations;
  std::vector<ModelEdge> edges;
  std::vector<ModelFinal> finals;

  bool operator==(const ModelFile&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

ModelFile parse_model(std::string_view text);
std::string serialize_model(const ModelFile& m);

// Each edge becomes its own action enabled only at its source location.
TimedAutomaton compile_model(const ModelFile& m);
TimedAutomaton parse_automaton(std::string_view text);

std::string format_constraint(const Constraint& c, const std::vector<std::string>& clocks);

}  // namespace rtg
