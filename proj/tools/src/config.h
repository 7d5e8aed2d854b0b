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

#ifndef BLOTTO_TOOLS_CONFIG_H_
#define BLOTTO_TOOLS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blotto/contest.h"
#include "blotto/equilibrium.h"

namespace blotto::tools {

struct Config {
  ContestSpec spec;
  SolverSettings solver;
  std::optional<std::uint64_t> seed;
};

// Parses a JSON contest document. Shock entries name the player by index
// (0-based) or label ("A", "B", ...) and the battle by its 1-based position.
// Throws InputError with the line and column of a syntax error, or with every
// violation reported by ValidateSpec.
Config ParseConfig(const std::string& text);
Config LoadConfig(const std::string& path);

// "A", "B", "P26", or a decimal index.
int ParsePlayer(const std::string& label, int num_players);
// Comma-separated winner labels, e.g. "A,B,A"; blank entries are ignored.
std::vector<int> ParseWinners(const std::string& schedule, int num_players);

}  // namespace blotto::tools

#endif  // BLOTTO_TOOLS_CONFIG_H_
