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

#ifndef BLOTTO_TOOLS_REPORT_H_
#define BLOTTO_TOOLS_REPORT_H_

#include <ostream>
#include <string>

#include "blotto/equilibrium.h"
#include "blotto/evaluator.h"
#include "blotto/montecarlo.h"
#include "json.hpp"

namespace blotto::tools {

using Json = nlohmann::ordered_json;

Json HistoryJson(const History& history);
Json EvaluationJson(const Evaluation& evaluation);
Json SimulationJson(const SimulationResult& result);
Json StageJson(const StageSolution& stage);
Json BackwardJson(const ContestSpec& spec, const BackwardSolution& solution);
Json TablesJson(const TabularStrategy::Tables& tables);
Json VerdictJson(const ProportionalityVerdict& verdict);

// One "path,value" row per scalar leaf, e.g. "payoffs.0,3.6".
void WriteCsv(const Json& report, std::ostream& out);
// Doubles are written in their shortest round-trip form.
void WriteJson(const Json& report, std::ostream& out);

}  // namespace blotto::tools

#endif  // BLOTTO_TOOLS_REPORT_H_
