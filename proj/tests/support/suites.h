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

#ifndef BLOTTO_TESTS_SUPPORT_SUITES_H_
#define BLOTTO_TESTS_SUPPORT_SUITES_H_

// Shared fixtures: exhaustive winner-sequence walks and the seeded random
// contest suites used by property tests and the acceptance runner.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "blotto/contest.h"
#include "blotto/evaluator.h"
#include "blotto/strategy.h"

namespace blotto::testing_support {

// Visits every history reachable with zero spends, terminal ones included.
void ForEachWinnerSequence(
    const ContestSpec& spec,
    const std::function<void(const ContestSpec&, const History&)>& visit);

// Visits every terminal extension of `history`, with zero spends.
void ForEachCompletion(const ContestSpec& spec, const History& history,
                       const std::function<void(const History&)>& visit);

struct SuiteOptions {
  int count = 200;
  std::uint64_t seed = 1;
  std::vector<double> alphas = {1.0};
  std::vector<double> betas = {1.0};
  bool shocks = false;
};

// Expected-value contests with n in {2,3,4}, m in {2..5}, battle values
// uniform in [0.5, 3] without a dictatorial battle (m = 2 cannot avoid one
// and is drawn unconstrained), budgets uniform in [0, 100]. With shocks,
// each (player, battle) pair gets a shock uniform in [-20, 20] with
// probability one half.
std::vector<ContestSpec> RandomSuite(const SuiteOptions& options);

// Every (history, player, delta) of the proportional one-shot-deviation
// sweep: all nonterminal proportional-path histories, the 21-point grid.
void ForEachDeviation(const ContestSpec& spec,
                      const std::function<void(const DeviationReport&)>& visit);

struct SmokeCase {
  std::string name;
  ContestSpec spec;
  StrategyProfile profile;
};

// Ten small contests with exact payoffs within easy reach of enumeration.
std::vector<SmokeCase> SmokeCases();

std::string Describe(const ContestSpec& spec);

}  // namespace blotto::testing_support

#endif  // BLOTTO_TESTS_SUPPORT_SUITES_H_
