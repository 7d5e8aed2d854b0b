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

#include "report.h"

namespace blotto::tools {
namespace {

void Flatten(const Json& node, const std::string& path, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) {
      Flatten(child, path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      const std::string key = std::to_string(i);
      Flatten(node[i], path.empty() ? key : path + "." + key, out);
    }
  } else if (node.is_string()) {
    std::string quoted = "\"";
    for (char c : node.get<std::string>()) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    out << path << ',' << quoted << "\"\n";
  } else {
    out << path << ',' << node.dump() << '\n';
  }
}

}  // namespace

Json HistoryJson(const History& history) {
  Json winners = Json::array();
  Json allocations = Json::array();
  for (int t = 0; t < history.length(); ++t) {
    winners.push_back(PlayerLabel(history.winner(t)));
    const auto row = history.allocations(t);
    allocations.push_back(Json(std::vector<double>(row.begin(), row.end())));
  }
  return Json{{"winners", winners}, {"allocations", allocations}};
}

Json EvaluationJson(const Evaluation& evaluation) {
  return Json{{"payoffs", evaluation.payoffs},
              {"leaf_probability", evaluation.leaf_probability},
              {"leaves", evaluation.leaves}};
}

Json SimulationJson(const SimulationResult& result) {
  return Json{{"trials", result.trials},
              {"seed", result.seed},
              {"mean", result.mean},
              {"standard_error", result.standard_error}};
}

Json StageJson(const StageSolution& stage) {
  return Json{{"allocations", stage.allocations},
              {"values", stage.values},
              {"residual", stage.residual},
              {"iterations", stage.iterations},
              {"degenerate", stage.degenerate}};
}

Json TablesJson(const TabularStrategy::Tables& tables) {
  Json out = Json::array();
  for (const auto& [key, table] : tables) {
    out.push_back(Json{{"battle", key.battle + 1},
                       {"standings", key.standings},
                       {"shares", table.shares},
                       {"fractions", table.fractions},
                       {"values", table.values}});
  }
  return out;
}

Json BackwardJson(const ContestSpec& spec, const BackwardSolution& solution) {
  Json path = Json::array();
  for (const PathNode& node : solution.path) {
    Json budgets = Json::array();
    for (int i = 0; i < spec.num_players(); ++i) {
      budgets.push_back(RemainingBudgetUnchecked(spec, node.history, i));
    }
    Json entry{{"battle", node.history.length() + 1},
               {"winners", HistoryJson(node.history)["winners"]},
               {"reach", node.reach},
               {"budgets", budgets}};
    entry.update(StageJson(node.stage));
    path.push_back(std::move(entry));
  }
  return Json{{"value", solution.value},
              {"stage_solves", solution.stage_solves},
              {"unconverged_table_points", solution.unconverged_table_points},
              {"path", path},
              {"tables", TablesJson(*solution.tables)}};
}

Json VerdictJson(const ProportionalityVerdict& verdict) {
  Json out{{"verdict", verdict.holds ? "Holds" : "Fails"},
           {"checked_histories", verdict.checked_histories},
           {"checked_deviations", verdict.checked_deviations},
           {"max_gain", verdict.max_gain}};
  if (verdict.counterexample) {
    const DeviationReport& c = *verdict.counterexample;
    Json counterexample{{"history", HistoryJson(c.history)},
                        {"player", PlayerLabel(c.player)},
                        {"delta", c.delta},
                        {"allocation", c.allocation},
                        {"gain", c.gain}};
    if (c.closed_form_gain) counterexample["closed_form_gain"] = *c.closed_form_gain;
    out["counterexample"] = std::move(counterexample);
  }
  return out;
}

void WriteCsv(const Json& report, std::ostream& out) {
  out << "path,value\n";
  Flatten(report, "", out);
}

void WriteJson(const Json& report, std::ostream& out) {
  out << report.dump(2) << '\n';
}

}  // namespace blotto::tools
