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

#include "rtg/model.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace rtg {

namespace {

struct Token {
  enum class Type { Ident, Number, Op, End };
  Type type = Type::End;
  std::string text;
  int column = 0;
};

std::vector<Token> lex_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Type::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Type::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      static const char* ops[] = {"<=", ">=", "==", "&&", "<", ">", "=", "-"};
      bool matched = false;
      for (const char* op : ops) {
        std::string_view sv(op);
        if (line.substr(i, sv.size()) == sv) {
          out.push_back({Token::Type::Op, std::string(sv), col});
          i += sv.size();
          matched = true;
          break;
        }
      }
      if (!matched) throw ParseError(line_no, col, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::Type::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no) : toks_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().type == Token::Type::End; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }

  std::string ident(const char* what) {
    Token t = next();
    if (t.type != Token::Type::Ident) fail(t, std::string("expected ") + what);
    return t.text;
  }

  std::int64_t number() {
    Token t = next();
    if (t.type != Token::Type::Number || t.text.size() > 15) fail(t, "expected a natural number");
    return std::stoll(t.text);
  }

  bool accept_ident(const char* word) {
    if (peek().type == Token::Type::Ident && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  int clock(const std::map<std::string, int>& clocks) {
    Token t = next();
    if (t.type != Token::Type::Ident) fail(t, "expected a clock name");
    auto it = clocks.find(t.text);
    if (it == clocks.end()) fail(t, "unknown clock '" + t.text + "'");
    return it->second;
  }

  Constraint constraint(const std::map<std::string, int>& clocks) {
    Constraint c;
    if (accept_ident("true")) return c;
    while (true) {
      Atom a;
      a.clock = clock(clocks);
      if (peek().type == Token::Type::Op && peek().text == "-") {
        next();
        a.other = clock(clocks);
      }
      Token op = next();
      if (op.type != Token::Type::Op) fail(op, "expected a comparison operator");
      if (op.text == "<") a.op = CmpOp::Lt;
      else if (op.text == "<=") a.op = CmpOp::Le;
      else if (op.text == "=" || op.text == "==") a.op = CmpOp::Eq;
      else if (op.text == ">=") a.op = CmpOp::Ge;
      else if (op.text == ">") a.op = CmpOp::Gt;
      else fail(op, "expected a comparison operator");
      a.constant = number();
      c.atoms.push_back(a);
      if (peek().type == Token::Type::Op && peek().text == "&&") {
        next();
        continue;
      }
      return c;
    }
  }

  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ModelFile parse_model(std::string_view text) {
  ModelFile m;
  std::map<std::string, int> clocks;
  std::map<std::string, int> locations;
  std::set<std::pair<std::string, std::string>> edge_keys;
  std::set<std::string> finals;
  bool header = false;
  bool have_clocks = false;
  bool have_k = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::string_view body = trim(line.substr(0, line.find('#')));
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!header) {
      if (body != "rtg-ta 1") throw ParseError(line_no, 1, "expected header 'rtg-ta 1'");
      header = true;
      continue;
    }
    LineParser p(lex_line(line, line_no), line_no);
    Token kw = p.peek();
    std::string key = p.ident("a keyword");
    if (key == "clocks") {
      if (have_clocks) p.fail(kw, "clocks declared twice");
      have_clocks = true;
      while (!p.at_end()) {
        Token t = p.peek();
        std::string name = p.ident("a clock name");
        if (name == "true") p.fail(t, "'true' is reserved");
        if (!clocks.emplace(name, static_cast<int>(m.clocks.size())).second) p.fail(t, "duplicate clock '" + name + "'");
        m.clocks.push_back(name);
      }
      if (m.clocks.empty()) p.fail(kw, "at least one clock is required");
      if (static_cast<int>(m.clocks.size()) > kMaxClocks) p.fail(kw, "too many clocks");
    } else if (key == "k") {
      if (have_k) p.fail(kw, "k declared twice");
      have_k = true;
      m.k = p.number();
    } else if (key == "location") {
      if (!have_clocks) p.fail(kw, "clocks must be declared first");
      Token t = p.peek();
      ModelLocation loc;
      loc.name = p.ident("a location name");
      if (locations.count(loc.name)) p.fail(t, "duplicate location '" + loc.name + "'");
      Token owner = p.peek();
      std::string who = p.ident("an owner (min or max)");
      if (who == "min") loc.owner = Player::Min;
      else if (who == "max") loc.owner = Player::Max;
      else p.fail(owner, "owner must be 'min' or 'max'");
      if (p.accept_ident("invariant")) loc.invariant = p.constraint(clocks);
      locations.emplace(loc.name, static_cast<int>(m.locations.size()));
      m.locations.push_back(std::move(loc));
    } else if (key == "edge") {
      ModelEdge e;
      Token src = p.peek();
      e.source = p.ident("a source location");
      if (!locations.count(e.source)) p.fail(src, "unknown location '" + e.source + "'");
      Token lbl = p.peek();
      e.label = p.ident("an edge label");
      Token dst = p.peek();
      e.target = p.ident("a target location");
      if (!locations.count(e.target)) p.fail(dst, "unknown location '" + e.target + "'");
      if (!edge_keys.emplace(e.source, e.label).second) {
        p.fail(lbl, "duplicate edge label '" + e.label + "' from '" + e.source + "'");
      }
      if (p.accept_ident("guard")) e.guard = p.constraint(clocks);
      if (p.accept_ident("reset")) {
        while (!p.at_end()) {
          Token t = p.peek();
          std::string name = p.ident("a clock name");
          if (!clocks.count(name)) p.fail(t, "unknown clock '" + name + "'");
          e.resets.push_back(name);
        }
      }
      m.edges.push_back(std::move(e));
    } else if (key == "final") {
      ModelFinal f;
      Token t = p.peek();
      f.location = p.ident("a location name");
      if (!locations.count(f.location)) p.fail(t, "unknown location '" + f.location + "'");
      if (!finals.insert(f.location).second) p.fail(t, "duplicate final for '" + f.location + "'");
      if (!p.at_end()) f.constraint = p.constraint(clocks);
      m.finals.push_back(std::move(f));
    } else {
      p.fail(kw, "unknown keyword '" + key + "'");
    }
    p.expect_end();
    if (end == text.size()) break;
  }
  if (!header) throw ParseError(line_no, 1, "missing header 'rtg-ta 1'");
  if (!have_clocks) throw ParseError(line_no, 1, "missing 'clocks' line");
  if (!have_k) throw ParseError(line_no, 1, "missing 'k' line");
  if (m.locations.empty()) throw ParseError(line_no, 1, "no locations declared");
  return m;
}

std::string format_constraint(const Constraint& c, const std::vector<std::string>& clocks) {
  if (c.atoms.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < c.atoms.size(); ++i) {
    const Atom& a = c.atoms[i];
    if (i) out += " && ";
    out += clocks[a.clock];
    if (a.other >= 0) out += " - " + clocks[a.other];
    out += std::string(" ") + to_string(a.op) + " " + std::to_string(a.constant);
  }
  return out;
}

std::string serialize_model(const ModelFile& m) {
  std::string out = "rtg-ta 1\nclocks";
  for (const auto& c : m.clocks) out += " " + c;
  out += "\nk " + std::to_string(m.k) + "\n";
  for (const auto& l : m.locations) {
    out += "location " + l.name + " " + to_string(l.owner);
    if (!l.invariant.atoms.empty()) out += " invariant " + format_constraint(l.invariant, m.clocks);
    out += "\n";
  }
  for (const auto& e : m.edges) {
    out += "edge " + e.source + " " + e.label + " " + e.target;
    if (!e.guard.atoms.empty()) out += " guard " + format_constraint(e.guard, m.clocks);
    if (!e.resets.empty()) {
      out += " reset";
      for (const auto& r : e.resets) out += " " + r;
    }
    out += "\n";
  }
  for (const auto& f : m.finals) {
    out += "final " + f.location;
    if (!f.constraint.atoms.empty()) out += " " + format_constraint(f.constraint, m.clocks);
    out += "\n";
  }
  return out;
}

TimedAutomaton compile_model(const ModelFile& m) {
  TimedAutomaton aut;
  aut.clocks = m.clocks;
  aut.k = m.k;
  const int n = static_cast<int>(m.locations.size());
  std::map<std::string, int> loc_index;
  aut.state = Zone::nothing(n);
  for (int i = 0; i < n; ++i) {
    aut.locations.push_back({m.locations[i].name, m.locations[i].owner});
    aut.state.per_location[i] = m.locations[i].invariant;
    loc_index[m.locations[i].name] = i;
  }
  for (const ModelEdge& e : m.edges) {
    Action a;
    a.name = e.label;
    a.enabled = Zone::nothing(n);
    int src = loc_index.at(e.source);
    a.enabled.per_location[src] = e.guard;
    a.target.resize(n);
    for (int l = 0; l < n; ++l) a.target[l] = l;
    a.target[src] = loc_index.at(e.target);
    for (const auto& r : e.resets) a.reset |= clock_bit(*aut.clock_index(r));
    aut.actions.push_back(std::move(a));
  }
  aut.final = Zone::nothing(n);
  for (const ModelFinal& f : m.finals) aut.final.per_location[loc_index.at(f.location)] = f.constraint;
  return aut;
}

TimedAutomaton parse_automaton(std::string_view text) { return compile_model(parse_model(text)); }

}  // namespace rtg
