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

#include "blotto/contest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blotto/errors.h"

namespace blotto {
namespace {

// Largest value total among players other than `player`.
double BestOtherTotal(const History& history, int num_players, int player) {
  double best = 0.0;
  for (int j = 0; j < num_players; ++j) {
    if (j != player) best = std::max(best, history.won(j));
  }
  return best;
}

// Index of the player whose lead exceeds all value still in play, or -1.
int ClinchingPlayer(const ContestSpec& spec, const History& history) {
  const int n = spec.num_players();
  const double remaining = spec.RemainingValue(history.length());
  for (int i = 0; i < n; ++i) {
    if (history.won(i) > BestOtherTotal(history, n, i) + remaining) return i;
  }
  return -1;
}

bool IsTerminalUnchecked(const ContestSpec& spec, const History& history) {
  if (history.length() >= spec.num_battles()) return true;
  return spec.objective == Objective::kWinProbability &&
         ClinchingPlayer(spec, history) >= 0;
}

bool IsGuaranteedLoserUnchecked(const ContestSpec& spec,
                                const History& history, int player) {
  const double remaining = spec.RemainingValue(history.length());
  return history.won(player) + remaining <
         BestOtherTotal(history, spec.num_players(), player);
}

std::vector<int> LeadingPlayers(const History& history, int num_players) {
  double best = -1.0;
  for (int i = 0; i < num_players; ++i) best = std::max(best, history.won(i));
  std::vector<int> leaders;
  for (int i = 0; i < num_players; ++i) {
    if (history.won(i) == best) leaders.push_back(i);
  }
  return leaders;
}

void CheckPlayer(const ContestSpec& spec, int player) {
  if (player < 0 || player >= spec.num_players()) {
    throw InputError("player index " + std::to_string(player) +
                     " out of range");
  }
}

}  // namespace

double ContestSpec::Shock(int player, int battle) const {
  auto it = shocks.find({player, battle});
  return it == shocks.end() ? 0.0 : it->second;
}

double ContestSpec::CumulativeShock(int player, int through_battle) const {
  double total = 0.0;
  for (auto it = shocks.lower_bound({player, 0});
       it != shocks.end() && it->first.first == player &&
       it->first.second <= through_battle;
       ++it) {
    total += it->second;
  }
  return total;
}

double ContestSpec::RemainingValue(int from_battle) const {
  double total = 0.0;
  for (int t = std::max(from_battle, 0); t < num_battles(); ++t) {
    total += values[t];
  }
  return total;
}

std::vector<std::string> ValidateSpec(const ContestSpec& spec) {
  std::vector<std::string> violations;
  const int n = spec.num_players();
  const int m = spec.num_battles();
  if (n < 2) violations.push_back("player count must be at least 2");
  if (m < 1) violations.push_back("battle count must be at least 1");
  bool values_ok = true;
  for (int t = 0; t < m; ++t) {
    if (!std::isfinite(spec.values[t]) || spec.values[t] <= 0.0) {
      violations.push_back("battle " + std::to_string(t + 1) +
                           " value must be positive and finite");
      values_ok = false;
    }
  }
  if (values_ok) {
    const double total = spec.TotalValue();
    for (int t = 0; t < m; ++t) {
      // A battle worth exactly the rest is allowed; the standard
      // counterexample contests sit on that boundary.
      if (spec.values[t] > total - spec.values[t]) {
        std::ostringstream os;
        os << "dictatorial battle " << t + 1 << ": value " << spec.values[t]
           << " exceeds the combined value " << total - spec.values[t]
           << " of the other battles";
        violations.push_back(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(spec.budgets[i])) {
      violations.push_back("non-finite budget for player " +
                           std::to_string(i));
    } else if (spec.budgets[i] < 0.0) {
      violations.push_back("negative budget for player " + std::to_string(i));
    }
  }
  if (!(spec.csf.alpha > 0.0) || !std::isfinite(spec.csf.alpha)) {
    violations.push_back("csf alpha must be positive");
  }
  if (!(spec.csf.beta > 0.0) || !std::isfinite(spec.csf.beta)) {
    violations.push_back("csf beta must be positive");
  }
  for (const auto& [key, amount] : spec.shocks) {
    const auto [player, battle] = key;
    if (player < 0 || player >= n || battle < 0 || battle >= m) {
      violations.push_back("shock for unknown player " +
                           std::to_string(player) + " or battle " +
                           std::to_string(battle + 1));
    } else if (!std::isfinite(amount)) {
      violations.push_back("non-finite shock for player " +
                           std::to_string(player) + " at battle " +
                           std::to_string(battle + 1));
    }
  }
  return violations;
}

ContestSpec WithoutShocksAfter(const ContestSpec& spec, int battle) {
  ContestSpec known = spec;
  std::erase_if(known.shocks,
                [battle](const auto& entry) { return entry.first.second > battle; });
  return known;
}

std::string PlayerLabel(int player) {
  if (player >= 0 && player < 26) return std::string(1, char('A' + player));
  return "P" + std::to_string(player);
}

std::span<const double> History::allocations(int battle) const {
  return std::span<const double>(allocations_).subspan(
      static_cast<size_t>(battle) * num_players_, num_players_);
}

double History::allocation(int battle, int player) const {
  return allocations_[static_cast<size_t>(battle) * num_players_ + player];
}

double History::spent(int player) const {
  if (num_players_ == 0) return 0.0;
  return spent_prefix_[static_cast<size_t>(length()) * num_players_ + player];
}

double History::won(int player) const {
  if (num_players_ == 0) return 0.0;
  return won_prefix_[static_cast<size_t>(length()) * num_players_ + player];
}

std::vector<double> History::ValueTotals(int num_players) const {
  std::vector<double> totals(num_players, 0.0);
  for (int i = 0; i < num_players; ++i) totals[i] = won(i);
  return totals;
}

void History::Append(std::span<const double> allocations, int winner,
                     double value) {
  const int n = static_cast<int>(allocations.size());
  if (num_players_ == 0) {
    if (n == 0) throw InputError("battle record without allocations");
    num_players_ = n;
    spent_prefix_.assign(n, 0.0);
    won_prefix_.assign(n, 0.0);
  } else if (n != num_players_) {
    throw InputError("battle record has " + std::to_string(n) +
                     " allocations, expected " + std::to_string(num_players_));
  }
  if (winner < 0 || winner >= n) {
    throw InputError("battle winner " + std::to_string(winner) +
                     " out of range");
  }
  const size_t base = static_cast<size_t>(length()) * n;
  allocations_.insert(allocations_.end(), allocations.begin(),
                      allocations.end());
  winners_.push_back(winner);
  won_values_.push_back(value);
  for (int i = 0; i < n; ++i) {
    spent_prefix_.push_back(spent_prefix_[base + i] + allocations[i]);
    won_prefix_.push_back(won_prefix_[base + i] + (i == winner ? value : 0.0));
  }
}

void History::Pop() {
  if (empty()) throw ContractError("Pop on empty history");
  Truncate(length() - 1);
}

void History::Truncate(int new_length) {
  if (new_length < 0 || new_length > length()) {
    throw ContractError("Truncate beyond history length");
  }
  const size_t n = num_players_;
  allocations_.resize(new_length * n);
  winners_.resize(new_length);
  won_values_.resize(new_length);
  spent_prefix_.resize((new_length + 1) * n);
  won_prefix_.resize((new_length + 1) * n);
}

void ValidateHistory(const ContestSpec& spec, const History& history) {
  const int n = spec.num_players();
  const int m = spec.num_battles();
  if (history.length() > m) {
    throw InputError("history has " + std::to_string(history.length()) +
                     " battles but the contest has " + std::to_string(m));
  }
  if (history.empty()) return;
  if (history.num_players() != n) {
    throw InputError("history records " +
                     std::to_string(history.num_players()) +
                     " players but the contest has " + std::to_string(n));
  }
  History prefix;
  for (int t = 0; t < history.length(); ++t) {
    if (IsTerminalUnchecked(spec, prefix)) {
      throw InputError("battle " + std::to_string(t + 1) +
                       " recorded after the contest ended");
    }
    const auto spends = history.allocations(t);
    for (int i = 0; i < n; ++i) {
      const double w = spends[i];
      if (!std::isfinite(w) || w < 0.0) {
        throw InputError("invalid spend at battle " + std::to_string(t + 1) +
                         " for player " + std::to_string(i));
      }
      const double budget = RemainingBudgetUnchecked(spec, prefix, i);
      if (w > budget + kBudgetTolerance) {
        std::ostringstream os;
        os << "player " << i << " spends " << w << " at battle " << t + 1
           << " with remaining budget " << budget;
        throw InputError(os.str());
      }
    }
    const double value = history.won_value(t);
    if (std::abs(value - spec.values[t]) > 1e-12 * spec.values[t]) {
      throw InputError("battle " + std::to_string(t + 1) +
                       " winner must receive the battle value");
    }
    prefix.Append(spends, history.winner(t), spec.values[t]);
  }
}

double CsfProbability(std::span<const double> allocations,
                      const CsfParams& params, int player) {
  if (player < 0 || player >= static_cast<int>(allocations.size())) {
    throw InputError("player index out of range");
  }
  return CsfProbabilities(allocations, params)[player];
}

std::vector<double> CsfProbabilities(std::span<const double> allocations,
                                     const CsfParams& params) {
  const size_t n = allocations.size();
  double largest = 0.0;
  for (double w : allocations) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("allocations must be finite and nonnegative");
    }
    largest = std::max(largest, w);
  }
  std::vector<double> p(n, 0.0);
  if (largest == 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(n));
    return p;
  }
  // beta cancels; normalising by the largest spend keeps w^alpha in range.
  double total = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double ratio = allocations[j] / largest;
    p[j] = params.alpha == 1.0 ? ratio : std::pow(ratio, params.alpha);
    total += p[j];
  }
  for (double& pj : p) pj /= total;
  return p;
}

double RemainingBudgetUnchecked(const ContestSpec& spec,
                                const History& history, int player) {
  const int t = history.length();
  const int m = spec.num_battles();
  double raw = spec.budgets[player] +
               spec.CumulativeShock(player, std::min(t, m - 1)) -
               history.spent(player);
  if (spec.objective == Objective::kWinProbability && t < m &&
      ClinchingPlayer(spec, history) < 0 &&
      IsGuaranteedLoserUnchecked(spec, history, player)) {
    return 0.0;
  }
  return std::max(raw, 0.0);
}

std::vector<double> RemainingBudgetsUnchecked(const ContestSpec& spec,
                                              const History& history) {
  std::vector<double> budgets(spec.num_players());
  for (int i = 0; i < spec.num_players(); ++i) {
    budgets[i] = RemainingBudgetUnchecked(spec, history, i);
  }
  return budgets;
}

double RemainingBudget(const ContestSpec& spec, const History& history,
                       int player) {
  CheckPlayer(spec, player);
  ValidateHistory(spec, history);
  return RemainingBudgetUnchecked(spec, history, player);
}

TerminalStatus GetTerminalStatus(const ContestSpec& spec,
                                 const History& history) {
  const int n = spec.num_players();
  if (history.length() >= spec.num_battles()) {
    return TerminalStatus::Terminal(LeadingPlayers(history, n));
  }
  if (spec.objective == Objective::kWinProbability) {
    const int clincher = ClinchingPlayer(spec, history);
    if (clincher >= 0) return TerminalStatus::Terminal({clincher});
  }
  return TerminalStatus::Ongoing();
}

PayoffVector TerminalPayoff(const ContestSpec& spec, const History& history) {
  const TerminalStatus status = GetTerminalStatus(spec, history);
  if (!status.terminal()) {
    throw ContractError("terminal payoff requested for an ongoing history");
  }
  const int n = spec.num_players();
  PayoffVector payoff(n, 0.0);
  if (spec.objective == Objective::kExpectedValue) {
    for (int i = 0; i < n; ++i) payoff[i] = history.won(i);
  } else {
    const double share = 1.0 / static_cast<double>(status.winners().size());
    for (int i : status.winners()) payoff[i] = share;
  }
  return payoff;
}

bool IsGuaranteedLoser(const ContestSpec& spec, const History& history,
                       int player) {
  CheckPlayer(spec, player);
  if (spec.objective != Objective::kWinProbability) {
    throw ContractError(
        "guaranteed losers are only defined for win-probability contests");
  }
  if (IsTerminalUnchecked(spec, history)) {
    throw ContractError("guaranteed-loser test on a terminal history");
  }
  return IsGuaranteedLoserUnchecked(spec, history, player);
}

}  // namespace blotto
