// Copyright 2026 The Blotto Authors
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

#include "commands.h"

#include <algorithm>
#include <cmath>

#include "blotto/errors.h"
#include "config.h"

namespace blotto::tools {
namespace {

ContestSpec TwoPlayerWinProbability(std::vector<double> values) {
  ContestSpec spec;
  spec.values = std::move(values);
  spec.budgets = {100.0, 100.0};
  spec.objective = Objective::kWinProbability;
  return spec;
}

std::string Winners(const History& history) {
  std::string out;
  for (int t = 0; t < history.length(); ++t) {
    if (t > 0) out += ',';
    out += PlayerLabel(history.winner(t));
  }
  return out;
}

// Largest |spend - reference| over path nodes with at least `min_played`
// battles behind them.
double MaxPathError(const BackwardSolution& solution, int min_played,
                    double reference) {
  double error = 0.0;
  for (const PathNode& node : solution.path) {
    if (node.history.length() < min_played) continue;
    for (double w : node.stage.allocations) {
      error = std::max(error, std::abs(w - reference));
    }
  }
  return error;
}

Json SpendsByBattle(const BackwardSolution& solution, int battles) {
  Json out = Json::array();
  for (int t = 0; t < battles; ++t) {
    for (const PathNode& node : solution.path) {
      if (node.history.length() == t) {
        out.push_back(Json{{"battle", t + 1},
                           {"winners", Winners(node.history)},
                           {"spends", node.stage.allocations}});
        break;
      }
    }
  }
  return out;
}

Json ExampleOne() {
  const ContestSpec spec = TwoPlayerWinProbability({1, 1, 1});
  const BackwardSolution solution = SolveBackward(spec);
  constexpr double kOnPathSpend = 100.0 / 3.0;
  Json relation = Json::array();
  for (double first : {10.0, 100.0 / 3.0, 60.0}) {
    History history;
    const double spends[] = {first, first};
    history.Append(spends, 0, 1.0);
    const StageSolution stage =
        StageEquilibrium(spec, history, RecursiveContinuation(spec));
    relation.push_back(Json{{"first_battle_spend", first},
                            {"reference", (100.0 - first) / 2.0},
                            {"computed", stage.allocations}});
  }
  return Json{
      {"demo", "example1"},
      {"contest", "battles (1,1,1), budgets (100,100), win probability"},
      {"reference", {{"on_path_spend", kOnPathSpend}, {"verdict", "Holds"}}},
      {"computed",
       {{"spends_by_battle", SpendsByBattle(solution, 3)},
        {"max_abs_error", MaxPathError(solution, 0, kOnPathSpend)},
        {"verdict", VerdictJson(CheckProportionality(spec))["verdict"]}}},
      {"second_battle_after_A", relation}};
}

Json ExampleTwo() {
  const ContestSpec spec = TwoPlayerWinProbability({2, 1, 1, 1});
  const BackwardSolution solution = SolveBackward(spec);
  constexpr double kFirstSpend = 50.0;
  constexpr double kLaterSpend = 50.0 / 3.0;
  return Json{
      {"demo", "example2"},
      {"contest", "battles (2,1,1,1), budgets (100,100), win probability"},
      {"reference",
       {{"first_battle_spend", kFirstSpend},
        {"later_battle_spend", kLaterSpend},
        {"proportional_first_battle_spend", 40.0},
        {"verdict", "Fails"}}},
      {"computed",
       {{"spends_by_battle", SpendsByBattle(solution, 4)},
        {"first_battle_abs_error",
         std::max(std::abs(solution.path.front().stage.allocations[0] - kFirstSpend),
                  std::abs(solution.path.front().stage.allocations[1] - kFirstSpend))},
        {"later_battle_max_abs_error", MaxPathError(solution, 1, kLaterSpend)},
        {"verdict", VerdictJson(CheckProportionality(spec))["verdict"]}}}};
}

Json ExampleThree() {
  const ContestSpec spec = TwoPlayerWinProbability({1, 1, 1, 2});
  const BackwardSolution solution = SolveBackward(spec);
  Json computed{{"spends_by_battle", SpendsByBattle(solution, 4)},
                {"verdict", VerdictJson(CheckProportionality(spec))["verdict"]}};
  Json all_in = Json::array();
  for (const PathNode& node : solution.path) {
    const std::vector<int> prefix = {0, 1};
    if (node.history.length() < 2) continue;
    const std::vector<int> winners = node.history.winners();
    if (!std::equal(prefix.begin(), prefix.end(), winners.begin())) continue;
    all_in.push_back(Json{
        {"winners", Winners(node.history)},
        {"remaining_budgets",
         {RemainingBudgetUnchecked(spec, node.history, 0),
          RemainingBudgetUnchecked(spec, node.history, 1)}},
        {"spends", node.stage.allocations}});
  }
  computed["after_A_B"] = all_in;
  return Json{{"demo", "example3"},
              {"contest", "battles (1,1,1,2), budgets (100,100), win probability"},
              {"reference",
               {{"after_A_B", "nothing on battle 3, entire remaining budget on battle 4"},
                {"verdict", "Fails"}}},
              {"computed", computed}};
}

Json BigLastBattleDemo() {
  Json runs = Json::array();
  for (int players : {2, 3}) {
    for (int battles : {4, 5}) {
      ContestSpec spec;
      spec.values.assign(battles - 1, 1.0);
      spec.values.push_back(3.0);
      spec.budgets.assign(players, 100.0);
      spec.objective = Objective::kWinProbability;
      std::vector<int> alternating;
      for (int t = 0; t < battles - 2; ++t) alternating.push_back(t % players);
      SamplingPlan plan;
      plan.histories = {ProportionalPathHistory(spec, alternating)};
      runs.push_back(Json{{"players", players},
                          {"battles", battles},
                          {"reference", "Fails"},
                          {"computed", VerdictJson(CheckProportionality(spec, plan))}});
    }
  }
  return Json{{"demo", "prop1"},
              {"contest", "battles (1,...,1,3), equal budgets, win probability"},
              {"runs", runs}};
}

History SubgameRoot(const ContestSpec& spec, const CommandOptions& options) {
  if (!options.history) return History();
  return ProportionalPathHistory(
      spec, ParseWinners(*options.history, spec.num_players()));
}

StrategyProfile NamedProfile(const Config& config, const std::string& name) {
  if (name == "proportional") return ProportionalProfile(config.spec.num_players());
  if (name == "equilibrium") return SolveBackward(config.spec, config.solver).profile;
  throw InputError("unknown profile \"" + name +
                   "\" (expected proportional or equilibrium)");
}

}  // namespace

Json DemoReport(const std::string& name) {
  if (name == "example1") return ExampleOne();
  if (name == "example2") return ExampleTwo();
  if (name == "example3") return ExampleThree();
  if (name == "prop1") return BigLastBattleDemo();
  throw InputError("unknown demo \"" + name +
                   "\" (expected example1, example2, example3 or prop1)");
}

CommandResult BuildReport(const CommandOptions& options) {
  if (options.command == "demo") return {DemoReport(options.demo), kExitOk};
  if (!options.config_path) {
    throw InputError(options.command + " needs --config");
  }
  const Config config = LoadConfig(*options.config_path);
  const ContestSpec& spec = config.spec;
  const History root = SubgameRoot(spec, options);
  Json report{{"command", options.command}, {"history", HistoryJson(root)}};

  if (options.command == "evaluate") {
    report["profile"] = options.profile;
    report.update(EvaluationJson(Evaluate(NamedProfile(config, options.profile), spec, root)));
    return {report, kExitOk};
  }
  if (options.command == "simulate") {
    const std::uint64_t seed = options.seed.value_or(config.seed.value_or(0));
    report["profile"] = options.profile;
    report.update(SimulationJson(Simulate(NamedProfile(config, options.profile), spec,
                                          seed, options.trials, root,
                                          {options.threads})));
    return {report, kExitOk};
  }
  if (options.command == "solve") {
    report.update(BackwardJson(spec, SolveBackward(spec, config.solver, root)));
    return {report, kExitOk};
  }
  if (options.command == "check") {
    SamplingPlan plan;
    if (options.history) plan.histories = {root};
    const ProportionalityVerdict verdict = CheckProportionality(spec, plan);
    report.update(VerdictJson(verdict));
    return {report, verdict.holds ? kExitOk : kExitFails};
  }
  throw InputError("unknown command \"" + options.command + "\"");
}

int RunCommand(const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.output != "json" && options.output != "csv") {
    err << "error: --output must be json or csv\n";
    return kExitError;
  }
  CommandResult result;
  try {
    result = BuildReport(options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (options.output == "csv") {
    WriteCsv(result.report, out);
  } else {
    WriteJson(result.report, out);
  }
  return result.status;
}

}  // namespace blotto::tools
