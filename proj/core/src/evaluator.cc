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

#include "blotto/evaluator.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blotto/errors.h"

namespace blotto {
namespace {

void CheckEnumerationSize(const ContestSpec& spec, const History& history,
                          const EvaluationOptions& options) {
  const int remaining = spec.num_battles() - history.length();
  double leaves = 1.0;
  for (int t = 0; t < remaining; ++t) leaves *= spec.num_players();
  if (leaves > static_cast<double>(options.leaf_cap)) {
    std::ostringstream os;
    os << "exact evaluation would enumerate up to " << leaves
       << " winner sequences (cap " << options.leaf_cap
       << "); use Monte Carlo simulation instead";
    throw ResourceError(os.str());
  }
}

class Enumerator {
 public:
  Enumerator(const StrategyProfile& profile, const ContestSpec& spec)
      : profile_(profile), spec_(spec), result_{PayoffVector(spec.num_players(), 0.0)} {}

  void Run(History& history, double reach) {
    if (GetTerminalStatus(spec_, history).terminal()) {
      const PayoffVector payoff = TerminalPayoff(spec_, history);
      for (size_t i = 0; i < payoff.size(); ++i) {
        result_.payoffs[i] += reach * payoff[i];
      }
      result_.leaf_probability += reach;
      ++result_.leaves;
      return;
    }
    const std::vector<double> spends = AllocationsAt(profile_, spec_, history);
    const std::vector<double> p = CsfProbabilities(spends, spec_.csf);
    const double value = spec_.values[history.length()];
    for (int winner = 0; winner < spec_.num_players(); ++winner) {
      if (p[winner] == 0.0) continue;
      history.Append(spends, winner, value);
      Run(history, reach * p[winner]);
      history.Pop();
    }
  }

  Evaluation& result() { return result_; }

 private:
  const StrategyProfile& profile_;
  const ContestSpec& spec_;
  Evaluation result_;
};

void BuildNode(const StrategyProfile& profile, const ContestSpec& spec,
               OutcomeTree& tree, int index) {
  OutcomeNode& node = tree.nodes[index];
  node.status = GetTerminalStatus(spec, node.history);
  if (node.status.terminal()) {
    node.payoff = TerminalPayoff(spec, node.history);
    return;
  }
  node.allocations = AllocationsAt(profile, spec, node.history);
  const std::vector<double> p = CsfProbabilities(node.allocations, spec.csf);
  const double value = spec.values[node.history.length()];
  for (int winner = 0; winner < spec.num_players(); ++winner) {
    if (p[winner] == 0.0) continue;
    OutcomeNode child;
    child.history = tree.nodes[index].history;
    child.history.Append(tree.nodes[index].allocations, winner, value);
    child.reach = tree.nodes[index].reach * p[winner];
    child.parent = index;
    tree.nodes.push_back(std::move(child));
    const int child_index = static_cast<int>(tree.nodes.size()) - 1;
    // push_back may have moved the parent; index again.
    tree.nodes[index].children.push_back(child_index);
    tree.nodes[index].branch_probabilities.push_back(p[winner]);
    BuildNode(profile, spec, tree, child_index);
  }
}

double PowerOrIdentity(double w, double alpha) {
  return alpha == 1.0 ? w : std::pow(w, alpha);
}

}  // namespace

Evaluation Evaluate(const StrategyProfile& profile, const ContestSpec& spec,
                    const History& history, const EvaluationOptions& options) {
  ValidateHistory(spec, history);
  if (profile.size() != spec.num_players()) {
    throw InputError("profile size does not match the player count");
  }
  CheckEnumerationSize(spec, history, options);
  Enumerator enumerator(profile, spec);
  History scratch = history;
  enumerator.Run(scratch, 1.0);
  return std::move(enumerator.result());
}

PayoffVector ExpectedPayoffs(const StrategyProfile& profile,
                             const ContestSpec& spec, const History& history,
                             const EvaluationOptions& options) {
  return Evaluate(profile, spec, history, options).payoffs;
}

double OutcomeTree::LeafProbability() const {
  double total = 0.0;
  for (const OutcomeNode& node : nodes) {
    if (node.status.terminal()) total += node.reach;
  }
  return total;
}

int OutcomeTree::LeafCount() const {
  return static_cast<int>(std::count_if(
      nodes.begin(), nodes.end(),
      [](const OutcomeNode& node) { return node.status.terminal(); }));
}

PayoffVector OutcomeTree::ExpectedPayoffs() const {
  PayoffVector total;
  for (const OutcomeNode& node : nodes) {
    if (!node.status.terminal()) continue;
    if (total.empty()) total.assign(node.payoff.size(), 0.0);
    for (size_t i = 0; i < node.payoff.size(); ++i) {
      total[i] += node.reach * node.payoff[i];
    }
  }
  return total;
}

OutcomeTree BuildOutcomeTree(const StrategyProfile& profile,
                             const ContestSpec& spec, const History& history,
                             const EvaluationOptions& options) {
  ValidateHistory(spec, history);
  CheckEnumerationSize(spec, history, options);
  OutcomeTree tree;
  OutcomeNode root;
  root.history = history;
  tree.nodes.push_back(std::move(root));
  BuildNode(profile, spec, tree, 0);
  return tree;
}

std::vector<double> FeasibleDeltaGrid(const ContestSpec& spec,
                                      const History& history, int player,
                                      int points) {
  const ContestSpec known = WithoutShocksAfter(spec, history.length());
  const double proportional = ProportionalAllocation(known, history, player);
  const double budget = RemainingBudgetUnchecked(known, history, player);
  if (budget <= 0.0 || points < 2) return {0.0};
  std::vector<double> deltas(points);
  for (int k = 0; k < points; ++k) {
    deltas[k] = k == points - 1
                    ? budget - proportional
                    : -proportional + budget * k / static_cast<double>(points - 1);
  }
  return deltas;
}

std::vector<DeviationReport> DeviationGains(const ContestSpec& spec,
                                            const History& history, int player,
                                            std::span<const double> deltas,
                                            const EvaluationOptions& options) {
  const ContestSpec known = WithoutShocksAfter(spec, history.length());
  // Validates the history and rejects terminal ones.
  const double proportional = ProportionalAllocation(known, history, player);
  const double budget = RemainingBudgetUnchecked(known, history, player);
  const StrategyProfile base = ProportionalProfile(spec.num_players());
  const double base_value = ExpectedPayoffs(base, known, history, options)[player];

  // Closed form reference inputs.
  const bool closed_form_applies =
      known.objective == Objective::kExpectedValue && known.csf.alpha == 1.0;
  double opponents = 0.0;
  for (int j = 0; j < known.num_players(); ++j) {
    if (j != player) opponents += RemainingBudgetUnchecked(known, history, j);
  }
  const int t = history.length();
  const double x_next = known.values[t];
  const double k = known.RemainingValue(t) / x_next;

  std::vector<DeviationReport> reports;
  reports.reserve(deltas.size());
  for (double delta : deltas) {
    const double allocation = proportional + delta;
    if (!std::isfinite(allocation) || allocation < -kBudgetTolerance ||
        allocation > budget + kBudgetTolerance) {
      std::ostringstream os;
      os << "deviation delta " << delta << " puts the spend " << allocation
         << " outside [0, " << budget << "]";
      throw InputError(os.str());
    }
    DeviationReport report;
    report.history = history;
    report.player = player;
    report.delta = delta;
    report.allocation = std::clamp(allocation, 0.0, budget);
    const StrategyProfile deviation =
        OneShotDeviation(base, known, player, history, report.allocation);
    report.gain =
        ExpectedPayoffs(deviation, known, history, options)[player] - base_value;
    // With nobody spending the battle is split evenly, outside the closed form.
    if (closed_form_applies && !(opponents == 0.0 && report.allocation == 0.0)) {
      report.closed_form_gain = ClosedFormGain(
          budget, opponents, k, report.allocation - proportional, x_next);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

DeviationReport DeviationGain(const ContestSpec& spec, const History& history,
                              int player, double delta,
                              const EvaluationOptions& options) {
  const double deltas[] = {delta};
  return DeviationGains(spec, history, player, deltas, options).front();
}

double ClosedFormGain(double a, double b, double k, double delta,
                      double x_next) {
  constexpr double kTol = 1e-9;
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("closed form needs nonnegative finite budgets");
  }
  if (!(k >= 1.0 - kTol) || !std::isfinite(k)) {
    throw InputError("closed form needs k >= 1");
  }
  const double spend = a / k + delta;
  const double scale = std::max(1.0, a);
  if (!std::isfinite(delta) || spend < -kTol * scale || spend > a + kTol * scale) {
    throw InputError("closed form needs 0 <= a/k + delta <= a");
  }
  if (b == 0.0 || delta == 0.0) return 0.0;
  const double numerator = x_next * b * delta * delta * k * k * k;
  const double denominator =
      (a + b) * (a * (k - 1.0) + b * (k - 1.0) - delta * k) * (a + b + delta * k);
  return numerator / denominator;
}

double MarginalGain(const ContestSpec& spec,
                    std::span<const double> battle_allocations, int player,
                    double k) {
  const double alpha = spec.csf.alpha;
  if (player < 0 || player >= static_cast<int>(battle_allocations.size())) {
    throw InputError("player index out of range");
  }
  double others = 0.0;
  for (size_t j = 0; j < battle_allocations.size(); ++j) {
    const double w = battle_allocations[j];
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("allocations must be finite and nonnegative");
    }
    if (static_cast<int>(j) != player) others += PowerOrIdentity(w, alpha);
  }
  const double own = battle_allocations[player];
  const double own_power = PowerOrIdentity(own, alpha);
  const double total = own_power + others;
  if (total == 0.0) {
    throw InputError("marginal gain is singular when nobody spends");
  }
  const double slope = alpha == 1.0 ? 1.0 : alpha * std::pow(own, alpha - 1.0);
  return k * slope * others / (total * total);
}

double UnitMarginalGain(double alpha, std::span<const double> unit_allocations,
                        int player, double own_spend, double k) {
  if (player < 0 || player >= static_cast<int>(unit_allocations.size())) {
    throw InputError("player index out of range");
  }
  double others = 0.0;
  for (size_t j = 0; j < unit_allocations.size(); ++j) {
    if (static_cast<int>(j) != player) {
      others += PowerOrIdentity(unit_allocations[j], alpha);
    }
  }
  const double k_alpha = std::pow(k, alpha);
  const double denominator = PowerOrIdentity(own_spend, alpha) + k_alpha * others;
  if (denominator == 0.0) {
    throw InputError("marginal gain is singular when nobody spends");
  }
  return alpha * std::pow(k, alpha + 1.0) * std::pow(own_spend, alpha - 1.0) *
         others / (denominator * denominator);
}

}  // namespace blotto
