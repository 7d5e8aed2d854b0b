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

#include <random>

#include "blotto/errors.h"
#include "blotto/evaluator.h"
#include "gtest/gtest.h"
#include "support/suites.h"

namespace blotto {
namespace {

constexpr double kTol = 1e-12;

ContestSpec Spec(std::vector<double> values, std::vector<double> budgets,
                 Objective objective = Objective::kExpectedValue) {
  ContestSpec spec;
  spec.values = std::move(values);
  spec.budgets = std::move(budgets);
  spec.objective = objective;
  return spec;
}

TEST(ProportionalTest, EqualBattlesSplitEvenly) {
  const ContestSpec spec = Spec({1, 1, 1}, {100, 100}, Objective::kWinProbability);
  EXPECT_NEAR(ProportionalAllocation(spec, History(), 0), 100.0 / 3, kTol);
}

TEST(ProportionalTest, LastBattleTakesEverything) {
  const ContestSpec spec = Spec({1, 2, 1}, {100, 100});
  const History history = ProportionalPathHistory(spec, {0, 1});
  EXPECT_NEAR(ProportionalAllocation(spec, history, 0),
              RemainingBudget(spec, history, 0), kTol);
}

TEST(ProportionalTest, WeightsByValue) {
  const ContestSpec spec = Spec({2, 1, 1, 1}, {100, 100}, Objective::kWinProbability);
  EXPECT_NEAR(ProportionalAllocation(spec, History(), 0), 40.0, kTol);
}

TEST(ProportionalTest, RejectsTerminalHistory) {
  const ContestSpec spec = Spec({1, 1}, {100, 100});
  EXPECT_THROW(ProportionalAllocation(spec, ProportionalPathHistory(spec, {0, 0}), 0),
               ContractError);
}

TEST(ProportionalTest, SpendsTelescopeToTheBudget) {
  const ContestSpec spec = Spec({1, 2.5, 0.7, 1.3}, {80, 55, 10});
  testing_support::ForEachWinnerSequence(
      spec, [](const ContestSpec& s, const History& zero_path) {
        if (zero_path.length() != s.num_battles()) return;
        const History path = ProportionalPathHistory(s, zero_path.winners());
        for (int i = 0; i < s.num_players(); ++i) {
          EXPECT_NEAR(path.spent(i), s.budgets[i], 1e-9);
        }
      });
}

TEST(ProportionalTest, StageOddsStayConstant) {
  const ContestSpec spec = Spec({1, 2, 0.7, 1.3}, {80, 55});
  const History path = ProportionalPathHistory(spec, {1, 0, 0, 1});
  for (int t = 0; t < path.length(); ++t) {
    EXPECT_NEAR(CsfProbability(path.allocations(t), spec.csf, 0), 80.0 / 135.0, kTol);
  }
}

TEST(AllocationsAtTest, ProportionalRoot) {
  const ContestSpec spec = Spec({1, 1, 1}, {100, 100}, Objective::kWinProbability);
  const auto w = AllocationsAt(ProportionalProfile(2), spec, History());
  EXPECT_NEAR(w[0], 100.0 / 3, kTol);
  EXPECT_NEAR(w[1], 100.0 / 3, kTol);
}

TEST(AllocationsAtTest, DeviationOverridesOnePlayer) {
  const ContestSpec spec = Spec({1, 1, 1}, {100, 100}, Objective::kWinProbability);
  const StrategyProfile profile =
      OneShotDeviation(ProportionalProfile(2), spec, 0, History(), 50.0);
  const auto w = AllocationsAt(profile, spec, History());
  EXPECT_EQ(w[0], 50.0);
  EXPECT_NEAR(w[1], 100.0 / 3, kTol);
  History after;
  after.Append(w, 0, 1.0);
  EXPECT_NEAR(AllocationsAt(profile, spec, after)[0], 25.0, kTol);
}

TEST(AllocationsAtTest, GuaranteedLoserSpendsNothing) {
  const ContestSpec spec = Spec({2, 2, 1, 1}, {10, 10, 10}, Objective::kWinProbability);
  const History history = ProportionalPathHistory(spec, {0, 1, 0});
  EXPECT_EQ(AllocationsAt(ProportionalProfile(3), spec, history)[2], 0.0);
}

TEST(AllocationsAtTest, ClampsStrategyOutput) {
  class Greedy final : public Strategy {
   public:
    double Allocate(const ContestSpec&, const History&, int) const override {
      return 1e9;
    }
    std::string Name() const override { return "greedy"; }
  };
  const ContestSpec spec = Spec({1, 1, 1}, {10, 20});
  auto greedy = std::make_shared<Greedy>();
  const auto w = AllocationsAt(StrategyProfile({greedy, greedy}), spec, History());
  EXPECT_EQ(w, (std::vector<double>{10, 20}));
}

TEST(OneShotDeviationTest, OwnOutputChangesNothing) {
  const ContestSpec spec = Spec({1, 2, 1.5}, {60, 40, 30});
  const StrategyProfile base = ProportionalProfile(3);
  const History root = ProportionalPathHistory(spec, {2});
  const double own = ProportionalAllocation(spec, root, 1);
  const StrategyProfile same = OneShotDeviation(base, spec, 1, root, own);
  testing_support::ForEachWinnerSequence(
      spec, [&](const ContestSpec& s, const History& zero_path) {
        const History h = ProportionalPathHistory(s, zero_path.winners());
        if (GetTerminalStatus(s, h).terminal()) return;
        EXPECT_EQ(AllocationsAt(same, s, h), AllocationsAt(base, s, h));
      });
  const auto a = ExpectedPayoffs(same, spec, History());
  const auto b = ExpectedPayoffs(base, spec, History());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(OneShotDeviationTest, RejectsInfeasibleSpend) {
  const ContestSpec spec = Spec({1, 1, 1}, {10, 10});
  EXPECT_THROW(OneShotDeviation(ProportionalProfile(2), spec, 0, History(), 10.5),
               InputError);
  EXPECT_THROW(OneShotDeviation(ProportionalProfile(2), spec, 0, History(), -1),
               InputError);
}

TEST(OneShotDeviationTest, AllInBeforeTheBigBattle) {
  const ContestSpec spec = Spec({1, 1, 1, 3}, {100, 100}, Objective::kWinProbability);
  const History h = ProportionalPathHistory(spec, {0, 1});
  const double budget = RemainingBudget(spec, h, 0);
  const StrategyProfile deviation =
      OneShotDeviation(ProportionalProfile(2), spec, 0, h, 0.0);
  History next = h;
  const auto w = AllocationsAt(deviation, spec, h);
  next.Append(w, 1, 1.0);
  EXPECT_NEAR(AllocationsAt(deviation, spec, next)[0], budget, kTol);
}

TEST(TabularStrategyTest, InterpolatesFractions) {
  StageTable table;
  table.shares = {0.0, 0.5, 1.0};
  table.fractions = {{0.0, 0.2, 0.4}, {0.3, 0.1, 0.0}};
  table.values = {0.0, 0.5, 1.0};
  auto tables = std::make_shared<TabularStrategy::Tables>();
  (*tables)[StageKey{0, {0.0, 0.0}}] = table;
  const TabularStrategy strategy(tables);
  ContestSpec spec = Spec({1, 1, 1}, {75, 25}, Objective::kWinProbability);
  // Share 0.75 sits halfway between grid points 0.5 and 1.
  EXPECT_NEAR(strategy.Allocate(spec, History(), 0), 0.3 * 100, kTol);
  EXPECT_NEAR(strategy.Allocate(spec, History(), 1), 0.05 * 100, kTol);
  History played;
  const double w[] = {1, 1};
  played.Append(w, 0, 1.0);
  EXPECT_THROW(strategy.Allocate(spec, played, 0), ContractError);
}

TEST(ReachableHistoriesTest, CountsAllWinnerPrefixes) {
  const ContestSpec spec = Spec({1, 1, 1}, {10, 10, 10});
  // 1 + 3 + 9 nonterminal histories.
  EXPECT_EQ(ProportionalReachableHistories(spec).size(), 13u);
  EXPECT_EQ(ProportionalReachableHistories(spec, 1).size(), 4u);
}

TEST(ReachableHistoriesTest, SkipsImpossibleWinners) {
  const ContestSpec spec = Spec({1, 1, 1}, {10, 0});
  // Player B never wins while A spends, so only A-prefixes appear.
  EXPECT_EQ(ProportionalReachableHistories(spec).size(), 3u);
}

}  // namespace
}  // namespace blotto
