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

#ifndef BLOTTO_TOOLS_COMMANDS_H_
#define BLOTTO_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "report.h"

namespace blotto::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFails = 2;

struct CommandOptions {
  std::string command;  // evaluate | simulate | solve | check | demo
  std::string demo;     // example1 | example2 | example3 | prop1
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;  // overrides the config seed
  std::int64_t trials = 100000;
  std::string output = "json";  // json | csv
  std::optional<std::string> history;  // winner schedule such as "A,B,A"
  std::string profile = "proportional";  // proportional | equilibrium
  int threads = 1;
};

struct CommandResult {
  Json report;
  int status = kExitOk;
};

// Throws BlottoError subclasses on bad input or failed computations.
CommandResult BuildReport(const CommandOptions& options);

Json DemoReport(const std::string& name);

// Writes the report to `out` (or the error to `err`) and returns the exit
// status.
int RunCommand(const CommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace blotto::tools

#endif  // BLOTTO_TOOLS_COMMANDS_H_
