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

#ifndef BLOTTO_CONTEST_H_
#define BLOTTO_CONTEST_H_

// Contest primitives for sequential winner-take-all Blotto contests: the
// contest description, histories of played battles, remaining budgets with
// publicly announced budget shocks, the ratio-form contest success function,
// terminal detection and terminal payoffs.
//
// Indexing: players are 0-based, battles are 0-based. A history of length t
// records battles 0..t-1; the next battle to be played is battle t.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blotto {

enum class Objective {
  kExpectedValue,   // payoff = total value of battles won
  kWinProbability,  // payoff = share of the overall win (1/|C| for ties)
};

// f(w) = beta * w^alpha.
struct CsfParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// Spends up to this much above the remaining budget are accepted and clamped.
inline constexpr double kBudgetTolerance = 1e-9;

using PayoffVector = std::vector<double>;

struct ContestSpec {
  std::vector<double> values;   // x^t, one per battle
  std::vector<double> budgets;  // W_i, one per player
  // (player, battle) -> shock announced before that battle is played.
  std::map<std::pair<int, int>, double> shocks;
  CsfParams csf;
  Objective objective = Objective::kExpectedValue;

  int num_players() const { return static_cast<int>(budgets.size()); }
  int num_battles() const { return static_cast<int>(values.size()); }

  double Shock(int player, int battle) const;
  // Sum of the player's shocks for battles 0..through_battle inclusive.
  double CumulativeShock(int player, int through_battle) const;
  // x^from + ... + x^{m-1}; zero when from >= m.
  double RemainingValue(int from_battle) const;
  double TotalValue() const { return RemainingValue(0); }
};

// Every violated modelling assumption, as human-readable messages. An empty
// result means the spec is valid. Violations are data, never exceptions.
std::vector<std::string> ValidateSpec(const ContestSpec& spec);

// Shocks for battles after `battle` removed: the contest as the players know
// it when battle `battle` is about to be played.
ContestSpec WithoutShocksAfter(const ContestSpec& spec, int battle);

// "A", "B", ... for the first 26 players, then "P26", "P27", ...
std::string PlayerLabel(int player);

// Record of played battles. Allocations are stored row-major per battle;
// cumulative spend and won value are kept per prefix so that truncation is
// exact.
class History {
 public:
  History() = default;

  int length() const { return static_cast<int>(winners_.size()); }
  bool empty() const { return winners_.empty(); }
  // Zero until the first battle has been appended.
  int num_players() const { return num_players_; }

  std::span<const double> allocations(int battle) const;
  double allocation(int battle, int player) const;
  int winner(int battle) const { return winners_[battle]; }
  double won_value(int battle) const { return won_values_[battle]; }
  const std::vector<int>& winners() const { return winners_; }

  // Totals over all recorded battles.
  double spent(int player) const;
  double won(int player) const;
  std::vector<double> ValueTotals(int num_players) const;

  void Append(std::span<const double> allocations, int winner, double value);
  void Pop();
  void Truncate(int length);

  friend bool operator==(const History& a, const History& b) {
    return a.winners_ == b.winners_ && a.allocations_ == b.allocations_ &&
           a.won_values_ == b.won_values_;
  }

 private:
  int num_players_ = 0;
  std::vector<double> allocations_;
  std::vector<int> winners_;
  std::vector<double> won_values_;
  // Prefix sums of size (length + 1) * num_players.
  std::vector<double> spent_prefix_;
  std::vector<double> won_prefix_;
};

// Throws InputError unless the history is feasible for the spec: spends
// within the running budget, one winner per battle receiving the battle
// value, and under the win-probability objective no battle played after the
// contest has ended.
void ValidateHistory(const ContestSpec& spec, const History& history);

// Probability that `player` wins a battle with the given allocations.
double CsfProbability(std::span<const double> allocations,
                      const CsfParams& params, int player);
std::vector<double> CsfProbabilities(std::span<const double> allocations,
                                     const CsfParams& params);

// max{W_i + sum_{j<=t} z_i^j - spent_i, 0} for the upcoming battle t. Players
// who are guaranteed to lose a win-probability contest have budget 0.
double RemainingBudget(const ContestSpec& spec, const History& history,
                       int player);
// As above without validating the history.
double RemainingBudgetUnchecked(const ContestSpec& spec,
                                const History& history, int player);
std::vector<double> RemainingBudgetsUnchecked(const ContestSpec& spec,
                                              const History& history);

class TerminalStatus {
 public:
  static TerminalStatus Ongoing() { return TerminalStatus(); }
  static TerminalStatus Terminal(std::vector<int> winners) {
    TerminalStatus status;
    status.terminal_ = true;
    status.winners_ = std::move(winners);
    return status;
  }

  bool terminal() const { return terminal_; }
  // Players with the highest won value (a single clinching player when the
  // contest ended early). Empty while ongoing.
  const std::vector<int>& winners() const { return winners_; }

 private:
  bool terminal_ = false;
  std::vector<int> winners_;
};

TerminalStatus GetTerminalStatus(const ContestSpec& spec,
                                 const History& history);

// Requires a terminal history; throws ContractError otherwise.
PayoffVector TerminalPayoff(const ContestSpec& spec, const History& history);

// True iff the player cannot reach even a tie for first place by winning
// every remaining battle. Only defined for nonterminal win-probability
// histories; throws ContractError otherwise.
bool IsGuaranteedLoser(const ContestSpec& spec, const History& history,
                       int player);

}  // namespace blotto

#endif  // BLOTTO_CONTEST_H_
