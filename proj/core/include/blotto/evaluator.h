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

#ifndef BLOTTO_EVALUATOR_H_
#define BLOTTO_EVALUATOR_H_

// Exact evaluation of pure strategy profiles by enumerating battle winners.
// Every nonterminal node branches on the winner of the next battle with the
// contest success probabilities of the profile's spends; win-probability
// branches end as soon as a player clinches.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "blotto/contest.h"
#include "blotto/strategy.h"

namespace blotto {

struct EvaluationOptions {
  // Refuse to enumerate when n^(battles left) exceeds this.
  std::uint64_t leaf_cap = 10'000'000;
};

struct Evaluation {
  PayoffVector payoffs;
  double leaf_probability = 0.0;  // 1 up to rounding
  std::uint64_t leaves = 0;
};

Evaluation Evaluate(const StrategyProfile& profile, const ContestSpec& spec,
                    const History& history, const EvaluationOptions& options = {});

// v_i(profile | history) for every player.
PayoffVector ExpectedPayoffs(const StrategyProfile& profile,
                             const ContestSpec& spec, const History& history,
                             const EvaluationOptions& options = {});

struct OutcomeNode {
  History history;
  double reach = 1.0;
  int parent = -1;
  std::vector<int> children;
  TerminalStatus status;
  std::vector<double> allocations;  // spends at this node when nonterminal
  std::vector<double> branch_probabilities;  // parallel to `children`
  PayoffVector payoff;                       // set on leaves
};

struct OutcomeTree {
  std::vector<OutcomeNode> nodes;  // nodes[0] is the root

  double LeafProbability() const;
  int LeafCount() const;
  PayoffVector ExpectedPayoffs() const;
};

// Materialised version of Evaluate, for inspection and reporting.
OutcomeTree BuildOutcomeTree(const StrategyProfile& profile,
                             const ContestSpec& spec, const History& history,
                             const EvaluationOptions& options = {});

struct DeviationReport {
  History history;
  int player = 0;
  double delta = 0.0;       // offset from the proportional spend
  double allocation = 0.0;  // proportional spend + delta
  // v_i(deviation | h) - v_i(proportional | h).
  double gain = 0.0;
  // v_i(proportional | h) - v_i(deviation | h) from the Tullock closed form,
  // when the contest maximises expected value with alpha = 1.
  std::optional<double> closed_form_gain;
};

// Gain of a one-shot deviation from the proportional profile at `history`.
// Both profiles are evaluated with what is known when the next battle is
// played: shocks announced for later battles are not anticipated.
DeviationReport DeviationGain(const ContestSpec& spec, const History& history,
                              int player, double delta,
                              const EvaluationOptions& options = {});

// Same, sharing one evaluation of the proportional profile across deltas.
std::vector<DeviationReport> DeviationGains(const ContestSpec& spec,
                                            const History& history, int player,
                                            std::span<const double> deltas,
                                            const EvaluationOptions& options = {});

// `points` evenly spaced deltas covering [-proportional, budget -
// proportional], endpoints included. A single 0 when the budget is empty.
std::vector<double> FeasibleDeltaGrid(const ContestSpec& spec,
                                      const History& history, int player,
                                      int points = 21);

// v(proportional) - v(deviation) for Tullock expected-value contests:
//   x_next * b * delta^2 * k^3 /
//       ((a + b) * (a(k-1) + b(k-1) - delta*k) * (a + b + delta*k))
// with a the deviator's budget, b the opponents' combined budget and
// k = (x^t + ... + x^m) / x^t. Requires k >= 1 and 0 <= a/k + delta <= a.
double ClosedFormGain(double a, double b, double k, double delta,
                      double x_next);

// Derivative of k * p_i with respect to the player's own spend, at the spends
// actually made in a battle worth k times a unit battle:
//   k * alpha * w_i^(alpha-1) * S / (w_i^alpha + S)^2,  S = sum_{j!=i} w_j^alpha.
double MarginalGain(const ContestSpec& spec,
                    std::span<const double> battle_allocations, int player,
                    double k);

// The same marginal gain written in terms of the opponents' spends on a unit
// battle, when they scale those spends by k for the k-value battle:
//   alpha * k^(alpha+1) * w^(alpha-1) * S1 / (w^alpha + k^alpha * S1)^2,
// S1 = sum_{j!=i} (unit_j)^alpha and w the player's spend on the k battle.
double UnitMarginalGain(double alpha, std::span<const double> unit_allocations,
                        int player, double own_spend, double k);

}  // namespace blotto

#endif  // BLOTTO_EVALUATOR_H_
