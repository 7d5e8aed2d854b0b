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

#include "blotto/strategy.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blotto/errors.h"

namespace blotto {
namespace {

double LinearLookup(const std::vector<double>& grid_values, double share) {
  const int points = static_cast<int>(grid_values.size());
  if (points == 1) return grid_values[0];
  const double position = std::clamp(share, 0.0, 1.0) * (points - 1);
  const int lo = std::min(static_cast<int>(position), points - 2);
  const double frac = position - lo;
  return grid_values[lo] + frac * (grid_values[lo + 1] - grid_values[lo]);
}

}  // namespace

double ProportionalStrategy::Allocate(const ContestSpec& spec,
                                      const History& history,
                                      int player) const {
  const int t = history.length();
  const double remaining_value = spec.RemainingValue(t);
  if (t >= spec.num_battles() || remaining_value <= 0.0) return 0.0;
  return RemainingBudgetUnchecked(spec, history, player) * spec.values[t] /
         remaining_value;
}

double DeviationStrategy::Allocate(const ContestSpec& spec,
                                   const History& history, int player) const {
  if (history == history_) return allocation_;
  return base_->Allocate(spec, history, player);
}

double TabularStrategy::Allocate(const ContestSpec& spec,
                                 const History& history, int player) const {
  if (spec.num_players() != 2) {
    throw ContractError("tabular strategies are two-player only");
  }
  StageKey key{history.length(), history.ValueTotals(spec.num_players())};
  auto it = tables_->find(key);
  if (it == tables_->end()) {
    std::ostringstream os;
    os << "no stage table for battle " << key.battle + 1 << " with standings";
    for (double s : key.standings) os << ' ' << s;
    throw ContractError(os.str());
  }
  const double a = RemainingBudgetUnchecked(spec, history, 0);
  const double b = RemainingBudgetUnchecked(spec, history, 1);
  const double total = a + b;
  if (total <= 0.0) return 0.0;
  return LinearLookup(it->second.fractions[player], a / total) * total;
}

StrategyProfile StrategyProfile::With(
    int player, std::shared_ptr<const Strategy> strategy) const {
  StrategyProfile copy = *this;
  copy.strategies_.at(player) = std::move(strategy);
  return copy;
}

StrategyProfile ProportionalProfile(int num_players) {
  auto proportional = std::make_shared<const ProportionalStrategy>();
  return StrategyProfile(std::vector<std::shared_ptr<const Strategy>>(
      num_players, proportional));
}

double ProportionalAllocation(const ContestSpec& spec, const History& history,
                              int player) {
  if (player < 0 || player >= spec.num_players()) {
    throw InputError("player index out of range");
  }
  ValidateHistory(spec, history);
  if (GetTerminalStatus(spec, history).terminal()) {
    throw ContractError("proportional allocation at a terminal history");
  }
  return ProportionalStrategy().Allocate(spec, history, player);
}

std::vector<double> AllocationsAt(const StrategyProfile& profile,
                                  const ContestSpec& spec,
                                  const History& history) {
  const int n = spec.num_players();
  if (profile.size() != n) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " strategies for " + std::to_string(n) + " players");
  }
  std::vector<double> spends(n);
  for (int i = 0; i < n; ++i) {
    // RemainingBudgetUnchecked already folds in the forced zero for
    // guaranteed losers, so the clamp applies both rules in order.
    const double budget = RemainingBudgetUnchecked(spec, history, i);
    if (budget <= 0.0) {
      spends[i] = 0.0;
      continue;
    }
    const double w = profile[i].Allocate(spec, history, i);
    spends[i] = std::isnan(w) ? 0.0 : std::clamp(w, 0.0, budget);
  }
  return spends;
}

StrategyProfile OneShotDeviation(const StrategyProfile& base,
                                 const ContestSpec& spec, int player,
                                 const History& history, double allocation) {
  if (player < 0 || player >= base.size()) {
    throw InputError("player index out of range");
  }
  const double budget = RemainingBudget(spec, history, player);
  if (!std::isfinite(allocation) || allocation < -kBudgetTolerance ||
      allocation > budget + kBudgetTolerance) {
    std::ostringstream os;
    os << "deviation spend " << allocation << " outside [0, " << budget << "]";
    throw InputError(os.str());
  }
  return base.With(player, std::make_shared<const DeviationStrategy>(
                               base.shared(player), history,
                               std::clamp(allocation, 0.0, budget)));
}

History ProportionalPathHistory(const ContestSpec& spec,
                                const std::vector<int>& winners) {
  const StrategyProfile profile = ProportionalProfile(spec.num_players());
  History history;
  for (int winner : winners) {
    if (GetTerminalStatus(spec, history).terminal()) {
      throw InputError("winner schedule continues past the end of the contest");
    }
    if (winner < 0 || winner >= spec.num_players()) {
      throw InputError("winner " + std::to_string(winner) + " out of range");
    }
    const std::vector<double> spends = AllocationsAt(profile, spec, history);
    history.Append(spends, winner, spec.values[history.length()]);
  }
  return history;
}

std::vector<History> ProportionalReachableHistories(const ContestSpec& spec,
                                                    int max_depth) {
  const int depth_cap = max_depth < 0 ? spec.num_battles() : max_depth;
  const StrategyProfile proportional = ProportionalProfile(spec.num_players());
  std::vector<History> out;
  if (GetTerminalStatus(spec, History()).terminal()) return out;
  out.emplace_back();
  for (std::size_t next = 0; next < out.size(); ++next) {
    if (out[next].length() >= depth_cap) continue;
    const History history = out[next];
    const std::vector<double> spends = AllocationsAt(proportional, spec, history);
    const std::vector<double> p = CsfProbabilities(spends, spec.csf);
    for (int winner = 0; winner < spec.num_players(); ++winner) {
      if (p[winner] == 0.0) continue;
      History child = history;
      child.Append(spends, winner, spec.values[history.length()]);
      if (!GetTerminalStatus(spec, child).terminal()) out.push_back(std::move(child));
    }
  }
  return out;
}

}  // namespace blotto
