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

#include "config.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "blotto/errors.h"
#include "json.hpp"

namespace blotto::tools {
namespace {

using nlohmann::json;

std::string Position(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  int line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  // nlohmann reports the byte after the offending character.
  const std::size_t column = byte > line_start ? byte - line_start : 1;
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double Number(const json& node, const char* where) {
  if (!node.is_number()) {
    throw InputError(std::string(where) + " must be a number");
  }
  return node.get<double>();
}

const json& Field(const json& object, const char* key, const char* where) {
  if (!object.is_object() || !object.contains(key)) {
    throw InputError(std::string(where) + " needs a \"" + key + "\" field");
  }
  return object.at(key);
}

std::vector<double> NumberList(const json& root, const char* key,
                               const char* field) {
  const json& list = Field(root, key, "config");
  if (!list.is_array() || list.empty()) {
    throw InputError(std::string("\"") + key + "\" must be a non-empty list");
  }
  std::vector<double> out;
  for (const json& entry : list) {
    out.push_back(Number(Field(entry, field, key), field));
  }
  return out;
}

int PlayerField(const json& node, int num_players) {
  if (node.is_string()) return ParsePlayer(node.get<std::string>(), num_players);
  if (node.is_number_integer()) {
    const int player = node.get<int>();
    if (player < 0 || player >= num_players) {
      throw InputError("shock player " + std::to_string(player) + " out of range");
    }
    return player;
  }
  throw InputError("shock player must be an index or a label");
}

void ReadSolver(const json& node, SolverSettings& solver) {
  if (!node.is_object()) throw InputError("\"solver\" must be an object");
  if (node.contains("grid_points")) {
    solver.grid_points = node.at("grid_points").get<int>();
    if (solver.grid_points < 3) throw InputError("solver.grid_points must be >= 3");
  }
  if (node.contains("tolerance")) {
    solver.tolerance = Number(node.at("tolerance"), "solver.tolerance");
    if (!(solver.tolerance > 0.0)) throw InputError("solver.tolerance must be positive");
  }
  if (node.contains("budget_step")) {
    solver.budget_step = Number(node.at("budget_step"), "solver.budget_step");
    if (!(solver.budget_step > 0.0)) {
      throw InputError("solver.budget_step must be positive");
    }
  }
  if (node.contains("max_iterations")) {
    solver.max_iterations = node.at("max_iterations").get<int>();
    if (solver.max_iterations < 1) {
      throw InputError("solver.max_iterations must be positive");
    }
  }
}

}  // namespace

int ParsePlayer(const std::string& label, int num_players) {
  int player = -1;
  if (label.size() == 1 && std::isupper(static_cast<unsigned char>(label[0]))) {
    player = label[0] - 'A';
  } else if (label.size() > 1 && label[0] == 'P' &&
             std::all_of(label.begin() + 1, label.end(), ::isdigit)) {
    player = std::stoi(label.substr(1));
  } else if (!label.empty() && std::all_of(label.begin(), label.end(), ::isdigit)) {
    player = std::stoi(label);
  }
  if (player < 0 || player >= num_players) {
    throw InputError("unknown player \"" + label + "\"");
  }
  return player;
}

std::vector<int> ParseWinners(const std::string& schedule, int num_players) {
  std::vector<int> winners;
  std::stringstream in(schedule);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) winners.push_back(ParsePlayer(item, num_players));
  }
  return winners;
}

Config ParseConfig(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("config parse error at " + Position(text, e.byte) + ": " +
                     e.what());
  }
  if (!root.is_object()) throw InputError("config must be a JSON object");

  Config config;
  ContestSpec& spec = config.spec;
  try {
    spec.budgets = NumberList(root, "players", "budget");
    spec.values = NumberList(root, "battles", "value");
    if (root.contains("csf")) {
      const json& csf = root.at("csf");
      if (csf.contains("alpha")) spec.csf.alpha = Number(csf.at("alpha"), "csf.alpha");
      if (csf.contains("beta")) spec.csf.beta = Number(csf.at("beta"), "csf.beta");
    }
    const std::string objective = root.value("objective", "expected_value");
    if (objective == "expected_value") {
      spec.objective = Objective::kExpectedValue;
    } else if (objective == "win_probability") {
      spec.objective = Objective::kWinProbability;
    } else {
      throw InputError("objective must be \"expected_value\" or \"win_probability\"");
    }
    if (root.contains("shocks")) {
      for (const json& shock : root.at("shocks")) {
        const int player = PlayerField(Field(shock, "player", "shock"),
                                       spec.num_players());
        const int battle = Field(shock, "battle", "shock").get<int>();
        if (battle < 1 || battle > spec.num_battles()) {
          throw InputError("shock battle " + std::to_string(battle) +
                           " outside 1.." + std::to_string(spec.num_battles()));
        }
        spec.shocks[{player, battle - 1}] +=
            Number(Field(shock, "amount", "shock"), "shock amount");
      }
    }
    if (root.contains("solver")) ReadSolver(root.at("solver"), config.solver);
    if (root.contains("seed")) config.seed = root.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw InputError(std::string("config type error: ") + e.what());
  }

  const std::vector<std::string> violations = ValidateSpec(spec);
  if (!violations.empty()) {
    std::string message = "invalid contest:";
    for (const std::string& v : violations) message += "\n  " + v;
    throw InputError(message);
  }
  return config;
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

}  // namespace blotto::tools
