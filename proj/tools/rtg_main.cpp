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

// rtg: solve, check and play reachability-time games on timed automata.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtg/countdown.hpp"
#include "rtg/model.hpp"
#include "rtg/model_io.hpp"
#include "rtg/play.hpp"
#include "rtg/region_graph.hpp"
#include "rtg/solver.hpp"
#include "rtg/validate.hpp"
#include "rtg/verify.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report(const json& j) { std::cerr << j.dump() << "\n"; }

// Loads and validates a model. Deadlock regions are reported but do not stop the
// caller; they are valued (inf, inf).
rtg::TimedAutomaton load_model(const std::string& path, bool& ok) {
  rtg::TimedAutomaton aut = rtg::parse_automaton(read_file(path));
  ok = true;
  for (const auto& v : rtg::validate(aut)) {
    bool blocking = v.kind != rtg::ModelViolation::Kind::DeadlockRegion;
    report({{"kind", rtg::to_string(v.kind)}, {"detail", v.detail}, {"severity", blocking ? "error" : "warning"}});
    ok = ok && !blocking;
  }
  return aut;
}

int cmd_solve(const std::string& path) {
  bool ok = false;
  auto aut = load_model(path, ok);
  if (!ok) return 1;
  rtg::RegionGraph g = rtg::build(aut);
  rtg::Solution sol = rtg::solve_minmax(g);
  std::cout << rtg::format_solution(g, sol);
  auto violations = rtg::verify_opt(sol.value, g, rtg::OptMode::MinMax);
  for (const auto& v : violations) std::cerr << rtg::violation_json(v, g) << "\n";
  return violations.empty() ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::string& solution, std::uint64_t seed) {
  bool ok = false;
  auto aut = load_model(path, ok);
  if (!ok) return 1;
  rtg::RegionGraph g = rtg::build(aut);
  rtg::RegionalValue v = rtg::parse_solution(read_file(solution), g);
  auto violations = rtg::verify_opt(v, g, rtg::OptMode::MinMax, seed);
  for (const auto& viol : violations) std::cerr << rtg::violation_json(viol, g) << "\n";
  std::cout << (violations.empty() ? "OK" : "VIOLATIONS " + std::to_string(violations.size())) << "\n";
  return violations.empty() ? 0 : 1;
}

int cmd_oracle(const std::string& path) {
  bool ok = false;
  auto aut = load_model(path, ok);
  if (!ok) return 1;
  rtg::RegionGraph g = rtg::build(aut);
  rtg::Solution sol = rtg::solve_minmax(g);
  rtg::RegionalValue oracle = rtg::value_iteration_oracle(g);
  auto diff = rtg::differing_regions(sol.value, oracle);
  if (diff.empty()) {
    std::cout << "IDENTICAL\n";
    return 0;
  }
  std::cout << "DIFFERENT " << diff.size() << "\n";
  const auto& clocks = aut.clocks;
  for (int r : diff) {
    report({{"kind", "OracleMismatch"},
            {"region", g.space().format(r)},
            {"solver", rtg::to_string(sol.value.T[r], clocks) + " / " + rtg::to_string(sol.value.D[r])},
            {"oracle", rtg::to_string(oracle.T[r], clocks) + " / " + rtg::to_string(oracle.D[r])}});
  }
  return 1;
}

struct SimulateOptions {
  std::string start;
  std::string epsilon = "1/100";
  std::string adversary = "optimal";
  std::string adversary_side = "max";
  std::uint64_t seed = 0;
  int max_steps = 1000;
};

int cmd_simulate(const std::string& path, const SimulateOptions& o) {
  bool ok = false;
  auto aut = load_model(path, ok);
  if (!ok) return 1;
  auto g = std::make_shared<const rtg::RegionGraph>(rtg::build(aut));
  rtg::Solution sol = rtg::solve_minmax(*g);
  rtg::Configuration s0 = rtg::parse_configuration(o.start, aut);
  auto schedule = rtg::geometric_schedule(rtg::parse_rational(o.epsilon));
  if (schedule.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  auto mu = rtg::concretize(g, sol.value, sol.mu, schedule, rtg::Player::Min);
  auto chi = rtg::concretize(g, sol.value, sol.chi, schedule, rtg::Player::Max);
  rtg::RandomPolicy random(g->shared_space(), o.seed);
  rtg::Policy* min_policy = &mu;
  rtg::Policy* max_policy = &chi;
  if (o.adversary == "random") {
    (o.adversary_side == "min" ? min_policy : max_policy) = &random;
  } else if (o.adversary != "optimal") {
    throw std::invalid_argument("unknown adversary '" + o.adversary + "'");
  }
  rtg::Run run = rtg::simulate(aut, s0, *min_policy, *max_policy, o.max_steps);
  std::cout << rtg::format_run(run, aut);
  return 0;
}

int cmd_regions(const std::string& path, bool list) {
  bool ok = false;
  auto aut = load_model(path, ok);
  if (!ok) return 1;
  rtg::RegionSpace space(aut);
  if (list) {
    for (int r = 0; r < space.size(); ++r) std::cout << space.format(r) << "\n";
    return 0;
  }
  std::cout << space.size() << " regions\n";
  auto counts = space.count_per_location();
  for (int l = 0; l < aut.num_locations(); ++l) std::cout << aut.locations[l].name << ": " << counts[l] << "\n";
  return 0;
}

int cmd_graph(const std::string& path) {
  bool ok = false;
  auto aut = load_model(path, ok);
  if (!ok) return 1;
  std::cout << rtg::format_graph(rtg::build(aut));
  return 0;
}

int cmd_gen_countdown(int nodes, std::int64_t b0, std::uint64_t seed, std::int64_t max_weight, bool reduce) {
  auto game = rtg::gen_random_countdown(seed, nodes, b0, max_weight);
  if (reduce) {
    std::cout << rtg::serialize_model(rtg::reduce_to_model(game));
  } else {
    std::cout << rtg::serialize_countdown(game);
  }
  return 0;
}

int cmd_countdown(const std::string& path, bool reduce_check) {
  auto game = rtg::parse_countdown(read_file(path));
  auto sol = rtg::solve_countdown(game);
  bool p1 = sol.player1_wins(game.initial, game.budget);
  std::cout << "winner=" << (p1 ? "player1" : "player2") << "\n";
  if (!reduce_check) return 0;
  auto aut = rtg::reduce_to_ta(game);
  rtg::RegionGraph g = rtg::build(aut);
  rtg::Solution s = rtg::solve_minmax(g);
  rtg::Configuration start{*aut.location_index(rtg::countdown_node_name(game.initial)), {0, 0}};
  int r = *g.space().index_of(start);
  bool finite = !s.value.D[r].is_infinite();
  std::cout << "reduced: regions=" << g.size() << " D=" << rtg::to_string(s.value.D[r])
            << (finite == p1 ? " agrees" : " DISAGREES") << "\n";
  return finite == p1 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability-time games on timed automata"};
  app.require_subcommand(1);

  std::string file;
  std::string solution;
  std::uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "Solve the game and print one line per region");
  solve->add_option("file", file, "Model file")->required();

  auto* verify = app.add_subcommand("verify", "Re-check a solve dump against the optimality equations");
  verify->add_option("file", file, "Model file")->required();
  verify->add_option("solution", solution, "Output of 'rtg solve'")->required();
  verify->add_option("--seed", seed, "Seed for sampled region points");

  auto* oracle = app.add_subcommand("oracle", "Compare the solver with value iteration");
  oracle->add_option("file", file, "Model file")->required();

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Play epsilon-optimal strategies from a start state");
  simulate->add_option("file", file, "Model file")->required();
  simulate->add_option("--start", sim.start, "Start state as loc,v1,v2,...")->required();
  simulate->add_option("--epsilon", sim.epsilon, "Slack epsilon as a rational");
  simulate->add_option("--adversary", sim.adversary, "optimal or random")->check(CLI::IsMember({"optimal", "random"}));
  simulate->add_option("--adversary-side", sim.adversary_side, "Player replaced by the random adversary")
      ->check(CLI::IsMember({"min", "max"}));
  simulate->add_option("--seed", sim.seed, "Random adversary seed");
  simulate->add_option("--max-steps", sim.max_steps, "Step bound");

  bool count = false;
  bool list = false;
  auto* regions = app.add_subcommand("regions", "Enumerate the regions inside the state zone");
  regions->add_option("file", file, "Model file")->required();
  auto* count_flag = regions->add_flag("--count", count, "Print region counts");
  regions->add_flag("--list", list, "List regions in canonical order")->excludes(count_flag);

  auto* graph = app.add_subcommand("graph", "Dump the timed region graph");
  graph->add_option("file", file, "Model file")->required();

  int nodes = 3;
  std::int64_t b0 = 8;
  std::int64_t max_weight = 4;
  bool reduce = false;
  auto* gen = app.add_subcommand("gen-countdown", "Generate a random countdown game");
  gen->add_option("--nodes", nodes, "Number of nodes")->check(CLI::Range(1, 64));
  gen->add_option("--b0", b0, "Initial budget")->check(CLI::Range(1, 4096));
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--max-weight", max_weight, "Largest move weight")->check(CLI::Range(1, 64));
  gen->add_flag("--reduce", reduce, "Print the reduced timed automaton instead");

  bool check = false;
  auto* countdown = app.add_subcommand("countdown", "Solve a countdown game file");
  countdown->add_option("file", file, "Countdown file")->required();
  countdown->add_flag("--check-reduction", check, "Cross-check against the reduced timed game");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(file);
    if (*verify) return cmd_verify(file, solution, seed);
    if (*oracle) return cmd_oracle(file);
    if (*simulate) return cmd_simulate(file, sim);
    if (*regions) return cmd_regions(file, list);
    if (*graph) return cmd_graph(file);
    if (*gen) return cmd_gen_countdown(nodes, b0, seed, max_weight, reduce);
    if (*countdown) return cmd_countdown(file, check);
  } catch (const rtg::ParseError& e) {
    report({{"kind", "ParseError"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    report({{"kind", "Error"}, {"message", e.what()}});
    return 2;
  }
  return 0;
}
