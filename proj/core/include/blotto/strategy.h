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

#ifndef BLOTTO_STRATEGY_H_
#define BLOTTO_STRATEGY_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blotto/contest.h"

namespace blotto {

// A pure strategy: maps a nonterminal history to the player's spend on the
// next battle. Implementations are immutable and may return values outside
// [0, remaining budget]; AllocationsAt clamps.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual double Allocate(const ContestSpec& spec, const History& history,
                          int player) const = 0;
  virtual std::string Name() const = 0;
};

// Remaining budget times x^t / (x^t + ... + x^m).
class ProportionalStrategy final : public Strategy {
 public:
  double Allocate(const ContestSpec& spec, const History& history,
                  int player) const override;
  std::string Name() const override { return "proportional"; }
};

// Plays `allocation` at exactly `history` and defers to `base` everywhere
// else.
class DeviationStrategy final : public Strategy {
 public:
  DeviationStrategy(std::shared_ptr<const Strategy> base, History history,
                    double allocation)
      : base_(std::move(base)),
        history_(std::move(history)),
        allocation_(allocation) {}

  double Allocate(const ContestSpec& spec, const History& history,
                  int player) const override;
  std::string Name() const override { return "deviation(" + base_->Name() + ")"; }

  const Strategy& base() const { return *base_; }
  const History& history() const { return history_; }
  double allocation() const { return allocation_; }

 private:
  std::shared_ptr<const Strategy> base_;
  History history_;
  double allocation_;
};

// Two-player table indexed by (battle, standings) and, within a stage, by
// player 0's share of the combined remaining budget on a uniform grid. Each
// grid point stores every player's spend as a fraction of the combined
// budget; lookups interpolate linearly between grid points.
struct StageTable {
  std::vector<double> shares;                  // uniform grid over [0, 1]
  std::vector<std::vector<double>> fractions;  // [player][grid point]
  std::vector<double> values;                  // player 0's value per point
};

struct StageKey {
  int battle = 0;
  std::vector<double> standings;  // value won so far per player

  friend auto operator<=>(const StageKey&, const StageKey&) = default;
};

class TabularStrategy final : public Strategy {
 public:
  using Tables = std::map<StageKey, StageTable>;

  explicit TabularStrategy(std::shared_ptr<const Tables> tables)
      : tables_(std::move(tables)) {}

  double Allocate(const ContestSpec& spec, const History& history,
                  int player) const override;
  std::string Name() const override { return "tabular"; }

  const Tables& tables() const { return *tables_; }

 private:
  std::shared_ptr<const Tables> tables_;
};

// One strategy per player.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<std::shared_ptr<const Strategy>> strategies)
      : strategies_(std::move(strategies)) {}

  int size() const { return static_cast<int>(strategies_.size()); }
  const Strategy& operator[](int player) const { return *strategies_[player]; }
  const std::shared_ptr<const Strategy>& shared(int player) const {
    return strategies_[player];
  }
  StrategyProfile With(int player, std::shared_ptr<const Strategy> strategy) const;

 private:
  std::vector<std::shared_ptr<const Strategy>> strategies_;
};

StrategyProfile ProportionalProfile(int num_players);

// The proportional spend of `player` at a nonterminal history. Throws
// ContractError on terminal histories.
double ProportionalAllocation(const ContestSpec& spec, const History& history,
                              int player);

// Every player's spend on the next battle: guaranteed losers of a
// win-probability contest spend 0, everything else is clamped to
// [0, remaining budget].
std::vector<double> AllocationsAt(const StrategyProfile& profile,
                                  const ContestSpec& spec,
                                  const History& history);

// `base` with player `player` spending `allocation` at `history` only.
// Throws InputError unless 0 <= allocation <= remaining budget (+tolerance).
StrategyProfile OneShotDeviation(const StrategyProfile& base,
                                 const ContestSpec& spec, int player,
                                 const History& history, double allocation);

// The history reached when every player follows the proportional profile and
// battles are won according to `winners`. Throws InputError if the schedule
// runs past the end of the contest.
History ProportionalPathHistory(const ContestSpec& spec,
                                const std::vector<int>& winners);

// Nonterminal histories reachable with positive probability under the
// proportional profile with at most `max_depth` battles played (-1: no
// limit), breadth first from the empty history.
std::vector<History> ProportionalReachableHistories(const ContestSpec& spec,
                                                    int max_depth = -1);

}  // namespace blotto

#endif  // BLOTTO_STRATEGY_H_
