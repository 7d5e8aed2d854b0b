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

// Command-line front end: blotto <command> [flags].

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  blotto::tools::CommandOptions options;
  CLI::App app{"Dynamic multi-battle contests with Tullock success functions"};
  app.require_subcommand(1);

  std::string config;
  std::string history;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* command, bool subgame) {
    command->add_option("--config", config, "Contest config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    command->add_option("--output", options.output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    if (subgame) {
      command->add_option("--history", history,
                          "Winner schedule such as A,B,A; proportional spends "
                          "are assumed along it");
    }
  };

  CLI::App* evaluate = app.add_subcommand("evaluate", "Exact expected payoffs");
  add_common(evaluate, true);
  evaluate->add_option("--profile", options.profile)
      ->check(CLI::IsMember({"proportional", "equilibrium"}));

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo payoffs");
  add_common(simulate, true);
  simulate->add_option("--profile", options.profile)
      ->check(CLI::IsMember({"proportional", "equilibrium"}));
  simulate->add_option("--seed", seed, "Overrides the config seed");
  simulate->add_option("--trials", options.trials)->check(CLI::PositiveNumber);
  simulate->add_option("--threads", options.threads)->check(CLI::PositiveNumber);

  CLI::App* solve = app.add_subcommand("solve", "Backward induction (two players)");
  add_common(solve, true);

  CLI::App* check = app.add_subcommand("check", "One-shot deviation check");
  add_common(check, true);

  CLI::App* demo = app.add_subcommand("demo", "Preconfigured reference runs");
  demo->add_option("name", options.demo)
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3", "prop1"}));
  demo->add_option("--output", options.output)
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors exit 1 like every other error; --help exits 0.
    const int status = app.exit(e);
    return status == 0 ? 0 : blotto::tools::kExitError;
  }

  options.command = app.get_subcommands().front()->get_name();
  if (!config.empty()) options.config_path = config;
  if (!history.empty()) options.history = history;
  if (simulate->count("--seed") > 0) options.seed = seed;
  return blotto::tools::RunCommand(options, std::cout, std::cerr);
}
