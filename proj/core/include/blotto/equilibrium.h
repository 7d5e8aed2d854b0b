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

#ifndef BLOTTO_EQUILIBRIUM_H_
#define BLOTTO_EQUILIBRIUM_H_

// Stage equilibria of two-player win-probability contests by iterated best
// responses, backward induction over whole contests, and one-shot-deviation
// checks of the proportional profile for any contest.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "blotto/contest.h"
#include "blotto/evaluator.h"
#include "blotto/strategy.h"

namespace blotto {

struct SolverSettings {
  int grid_points = 200;        // coarse best-response grid
  double tolerance = 1e-6;      // best-response improvement, payoff units
  double spend_tolerance = 1e-6;  // golden-section bracket, budget units
  double budget_step = 0.25;    // continuation grid resolution, budget units
  int max_iterations = 500;
  std::uint64_t max_stage_solves = 5'000'000;
};

// Payoff vector of a nonterminal successor history. Terminal successors are
// scored with TerminalPayoff and never reach the continuation.
using Continuation = std::function<PayoffVector(const History& successor)>;

struct BestResponseResult {
  double allocation = 0.0;
  double payoff = 0.0;
  bool flat = false;  // objective constant in own spend; proportional returned
};

// Maximises `player`'s stage payoff over its own spend on the next battle,
// holding the other entries of `allocations` fixed. Two-player
// win-probability contests only.
BestResponseResult BestResponse(const ContestSpec& spec, const History& history,
                                int player, std::span<const double> allocations,
                                const Continuation& continuation,
                                const SolverSettings& settings = {});

struct StageSolution {
  History history;
  std::vector<double> allocations;
  std::vector<double> values;  // stage payoffs at the solution
  double residual = 0.0;       // largest best-response improvement left
  int iterations = 0;
  bool degenerate = false;     // a flat best response was met
  std::vector<double> residual_trace;  // residual after each accepted step
};

// Simultaneous best responses from the proportional spends, damped so that
// every accepted step lowers the residual. Throws ConvergenceError when the
// iteration budget runs out.
StageSolution StageEquilibrium(const ContestSpec& spec, const History& history,
                               const Continuation& continuation,
                               const SolverSettings& settings = {});

// Scores successors by solving their stage equilibria recursively, without
// memoisation. Exact but exponential in the number of battles left; meant
// for the last two or three battles.
Continuation RecursiveContinuation(const ContestSpec& spec,
                                   const SolverSettings& settings = {});

struct PathNode {
  History history;
  double reach = 1.0;  // probability under equilibrium play
  StageSolution stage;
};

struct BackwardSolution {
  StrategyProfile profile;  // tabular, both players
  std::shared_ptr<const TabularStrategy::Tables> tables;
  // Every nonterminal history reached with positive probability under
  // equilibrium play, parents before children.
  std::vector<PathNode> path;
  PayoffVector value;  // at the root history
  Continuation continuation;
  std::uint64_t stage_solves = 0;
  int unconverged_table_points = 0;  // off-path grid points, last iterate kept
};

// Backward induction for two-player win-probability contests with at most
// five battles. Continuation values are tabulated per (battle, standings)
// over player 0's share of the combined budget; stages on the equilibrium
// path from `root` are then solved at their exact budgets. Continuation
// values treat budgets as known: shocks not yet announced are ignored.
BackwardSolution SolveBackward(const ContestSpec& spec,
                               const SolverSettings& settings = {},
                               const History& root = {});

struct SamplingPlan {
  // Checked first, in order.
  std::vector<History> histories;
  // Also check every history reachable under the proportional profile with
  // at most this many battles played (-1: all nonterminal depths).
  bool include_reachable = true;
  int max_depth = -1;
  int delta_points = 21;
  double tolerance = 1e-6;
  EvaluationOptions evaluation;
};

struct ProportionalityVerdict {
  bool holds = true;
  int checked_histories = 0;
  int checked_deviations = 0;
  double max_gain = 0.0;
  std::optional<DeviationReport> counterexample;  // first gain > tolerance
};

ProportionalityVerdict CheckProportionality(const ContestSpec& spec,
                                            const SamplingPlan& plan = {});

}  // namespace blotto

#endif  // BLOTTO_EQUILIBRIUM_H_
