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

#include "rtg/model_io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rtg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("expected an integer");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("expected an integer");
  }
  return std::stoll(std::string(s));
}

}  // namespace

SimpleFunction parse_simple_function(std::string_view text, const std::vector<std::string>& clocks) {
  text = trim(text);
  if (text == "inf") return SimpleFunction::infinite();
  if (text.substr(0, 6) == "const ") return SimpleFunction::constant(parse_int(text.substr(6)));
  auto dash = text.find(" - ");
  if (dash == std::string_view::npos) throw std::invalid_argument("malformed simple function '" + std::string(text) + "'");
  std::string name(trim(text.substr(dash + 3)));
  for (std::size_t c = 0; c < clocks.size(); ++c) {
    if (clocks[c] == name) return SimpleFunction::minus_clock(parse_int(text.substr(0, dash)), static_cast<int>(c));
  }
  throw std::invalid_argument("unknown clock '" + name + "'");
}

NatInf parse_natinf(std::string_view text) {
  text = trim(text);
  if (text == "inf") return NatInf::infinity();
  std::int64_t n = parse_int(text);
  if (n < 0) throw std::invalid_argument("negative step count");
  return NatInf(static_cast<std::uint64_t>(n));
}

RegionalValue parse_solution(std::string_view text, const RegionGraph& g) {
  std::map<std::string, int> index;
  for (int r = 0; r < g.size(); ++r) index.emplace(g.space().format(r), r);
  RegionalValue v{std::vector<SimpleFunction>(g.size(), SimpleFunction::infinite()),
                  std::vector<NatInf>(g.size(), NatInf::infinity())};
  std::vector<bool> seen(g.size(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      auto bar = line.find(" | ", pos);
      cols.push_back(line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
      if (bar == std::string::npos) break;
      pos = bar + 3;
    }
    if (cols.size() < 3 || cols[1].rfind("T=", 0) != 0 || cols[2].rfind("D=", 0) != 0) {
      throw ParseError(line_no, 1, "expected '<region> | T=<fn> | D=<n>'");
    }
    auto it = index.find(std::string(trim(cols[0])));
    if (it == index.end()) throw ParseError(line_no, 1, "unknown region '" + cols[0] + "'");
    if (seen[it->second]) throw ParseError(line_no, 1, "region listed twice");
    seen[it->second] = true;
    try {
      v.T[it->second] = parse_simple_function(cols[1].substr(2), g.automaton().clocks);
      v.D[it->second] = parse_natinf(cols[2].substr(2));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  for (int r = 0; r < g.size(); ++r) {
    if (!seen[r]) throw ParseError(line_no, 1, "missing region " + g.space().format(r));
  }
  return v;
}

Configuration parse_configuration(std::string_view text, const TimedAutomaton& aut) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  std::string s(text);
  while (true) {
    auto comma = s.find(',', pos);
    parts.emplace_back(trim(std::string_view(s).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  auto loc = aut.location_index(parts[0]);
  if (!loc) throw std::invalid_argument("unknown location '" + parts[0] + "'");
  if (static_cast<int>(parts.size()) != aut.num_clocks() + 1) {
    throw std::invalid_argument("expected " + std::to_string(aut.num_clocks()) + " clock values");
  }
  Configuration c{*loc, {}};
  for (std::size_t i = 1; i < parts.size(); ++i) c.valuation.push_back(parse_rational(parts[i]));
  return c;
}

}  // namespace rtg
