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

#include <random>
#include <vector>

#include "blotto/errors.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/suites.h"

namespace blotto {
namespace {

using testing::HasSubstr;

constexpr double kTol = 1e-12;

ContestSpec Spec(std::vector<double> values, std::vector<double> budgets,
                 Objective objective = Objective::kExpectedValue) {
  ContestSpec spec;
  spec.values = std::move(values);
  spec.budgets = std::move(budgets);
  spec.objective = objective;
  return spec;
}

History Played(const ContestSpec& spec, const std::vector<int>& winners) {
  History history;
  const std::vector<double> zeros(spec.num_players(), 0.0);
  for (size_t t = 0; t < winners.size(); ++t) {
    history.Append(zeros, winners[t], spec.values[t]);
  }
  return history;
}

TEST(ValidateSpecTest, AcceptsUnevenFourBattleContest) {
  EXPECT_TRUE(ValidateSpec(Spec({2, 1, 1, 1}, {100, 100})).empty());
}

TEST(ValidateSpecTest, FlagsDictatorialBattle) {
  const auto violations = ValidateSpec(Spec({5, 1, 1}, {100, 100}));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_THAT(violations[0], HasSubstr("dictatorial battle 1"));
}

TEST(ValidateSpecTest, AcceptsBattleWorthTheRest) {
  EXPECT_TRUE(ValidateSpec(Spec({1, 1, 1, 3}, {100, 100})).empty());
  EXPECT_TRUE(ValidateSpec(Spec({1, 2, 3}, {100, 100})).empty());
}

TEST(ValidateSpecTest, FlagsNegativeBudget) {
  const auto violations = ValidateSpec(Spec({1, 1, 1}, {-1, 100}));
  ASSERT_FALSE(violations.empty());
  EXPECT_THAT(violations[0], HasSubstr("negative budget"));
}

TEST(ValidateSpecTest, ReportsEveryViolation) {
  ContestSpec spec = Spec({5, 0, 1}, {-1});
  spec.csf.alpha = 0.0;
  EXPECT_GE(ValidateSpec(spec).size(), 4u);
}

TEST(CsfTest, NobodySpendsSplitsEvenly) {
  const double w[] = {0, 0, 0};
  EXPECT_DOUBLE_EQ(CsfProbability(w, {2.0, 7.0}, 0), 1.0 / 3.0);
}

TEST(CsfTest, EqualSpendsAreEven) {
  const double w[] = {50, 50};
  EXPECT_DOUBLE_EQ(CsfProbability(w, {}, 0), 0.5);
}

TEST(CsfTest, ScaleCancels) {
  const double w[] = {1, 2};
  EXPECT_NEAR(CsfProbability(w, {2.0, 5.0}, 0), 0.2, kTol);
}

TEST(CsfTest, RejectsNegativeAndNonFinite) {
  const double negative[] = {-1, 2};
  const double nan[] = {std::nan(""), 2};
  EXPECT_THROW(CsfProbability(negative, {}, 0), InputError);
  EXPECT_THROW(CsfProbability(nan, {}, 0), InputError);
}

TEST(CsfTest, SumsToOneAndIsHomogeneous) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> spend(0.0, 100.0);
  std::uniform_real_distribution<double> exponent(0.2, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<double> w(n);
    for (double& x : w) x = trial % 7 == 0 ? 0.0 : spend(rng);
    const CsfParams params{exponent(rng), 1.0};
    const CsfParams scaled_beta{params.alpha, 9.0};
    std::vector<double> scaled = w;
    for (double& x : scaled) x *= 3.7;
    const auto p = CsfProbabilities(w, params);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      total += p[i];
      EXPECT_NEAR(CsfProbability(scaled, params, i), p[i], kTol);
      EXPECT_NEAR(CsfProbability(w, scaled_beta, i), p[i], kTol);
    }
    EXPECT_NEAR(total, 1.0, kTol);
  }
}

TEST(CsfTest, HandlesTinySpendsWithoutUnderflow) {
  const double w[] = {1e-300, 3e-300};
  EXPECT_NEAR(CsfProbability(w, {4.0, 1.0}, 0), 1.0 / 82.0, kTol);
}

TEST(RemainingBudgetTest, EmptyHistoryIsTheBudget) {
  EXPECT_EQ(RemainingBudget(Spec({1, 1, 1}, {100, 100}), History(), 0), 100.0);
}

TEST(RemainingBudgetTest, SubtractsSpends) {
  const ContestSpec spec = Spec({1, 1, 1}, {100, 100}, Objective::kWinProbability);
  History history;
  const double spends[] = {100.0 / 3, 100.0 / 3};
  history.Append(spends, 0, 1.0);
  EXPECT_NEAR(RemainingBudget(spec, history, 0), 200.0 / 3, kTol);
  EXPECT_NEAR(RemainingBudget(spec, history, 1), 200.0 / 3, kTol);
}

TEST(RemainingBudgetTest, ClampsNegativeShockAtZero) {
  ContestSpec spec = Spec({1, 1, 1}, {10, 10});
  spec.shocks[{0, 1}] = -5.0;
  History history;
  const double spends[] = {10, 0};
  history.Append(spends, 0, 1.0);
  EXPECT_EQ(RemainingBudget(spec, history, 0), 0.0);
}

TEST(RemainingBudgetTest, IncludesShockForUpcomingBattleOnly) {
  ContestSpec spec = Spec({1, 1, 1}, {10, 10});
  spec.shocks[{1, 0}] = 4.0;
  spec.shocks[{1, 2}] = 6.0;
  EXPECT_EQ(RemainingBudget(spec, History(), 1), 14.0);
  const History one = Played(spec, {0});
  EXPECT_EQ(RemainingBudget(spec, one, 1), 14.0);
  const History two = Played(spec, {0, 0});
  EXPECT_EQ(RemainingBudget(spec, two, 1), 20.0);
}

TEST(RemainingBudgetTest, GuaranteedLoserHasNothing) {
  const ContestSpec spec =
      Spec({2, 2, 1, 1}, {10, 10, 10}, Objective::kWinProbability);
  const History history = Played(spec, {0, 1, 0});
  EXPECT_EQ(RemainingBudget(spec, history, 2), 0.0);
  EXPECT_EQ(RemainingBudget(spec, history, 1), 10.0);
}

TEST(RemainingBudgetTest, RejectsOverspending) {
  const ContestSpec spec = Spec({1, 1, 1}, {10, 10});
  History history;
  const double spends[] = {10.5, 0};
  history.Append(spends, 0, 1.0);
  EXPECT_THROW(RemainingBudget(spec, history, 0), InputError);
}

TEST(RemainingBudgetTest, AcceptsRoundingAboveTheBudget) {
  const ContestSpec spec = Spec({1, 1, 1}, {10, 10});
  History history;
  const double spends[] = {10.0 + 1e-10, 0};
  history.Append(spends, 0, 1.0);
  EXPECT_EQ(RemainingBudget(spec, history, 0), 0.0);
}

TEST(RemainingBudgetTest, NonincreasingInSpendAndNonnegative) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ContestSpec spec = Spec({1, 2, 3}, {50, 80});
  for (int trial = 0; trial < 200; ++trial) {
    History low;
    History high;
    const double base = 50 * unit(rng);
    const double extra = (50 - base) * unit(rng);
    const double a[] = {base, 10};
    const double b[] = {base + extra, 10};
    low.Append(a, 1, 1.0);
    high.Append(b, 1, 1.0);
    EXPECT_GE(RemainingBudget(spec, low, 0), RemainingBudget(spec, high, 0));
    EXPECT_GE(RemainingBudget(spec, high, 0), 0.0);
  }
}

TEST(TerminalStatusTest, EarlyClinch) {
  const ContestSpec spec = Spec({2, 1, 1, 1}, {100, 100}, Objective::kWinProbability);
  const TerminalStatus status = GetTerminalStatus(spec, Played(spec, {0, 0}));
  ASSERT_TRUE(status.terminal());
  EXPECT_EQ(status.winners(), std::vector<int>{0});
}

TEST(TerminalStatusTest, SplitContinues) {
  const ContestSpec spec = Spec({1, 1, 1}, {100, 100}, Objective::kWinProbability);
  EXPECT_FALSE(GetTerminalStatus(spec, Played(spec, {0, 1})).terminal());
}

TEST(TerminalStatusTest, LeadEqualToRemainingValueIsNotAClinch) {
  const ContestSpec spec = Spec({1, 1, 1, 3}, {100, 100}, Objective::kWinProbability);
  EXPECT_FALSE(GetTerminalStatus(spec, Played(spec, {0, 0, 0})).terminal());
}

TEST(TerminalStatusTest, ExpectedValueOnlyEndsAtFullLength) {
  const ContestSpec spec = Spec({2, 1, 1, 1}, {100, 100});
  EXPECT_FALSE(GetTerminalStatus(spec, Played(spec, {0, 0, 0})).terminal());
  EXPECT_TRUE(GetTerminalStatus(spec, Played(spec, {0, 0, 0, 0})).terminal());
}

TEST(TerminalStatusTest, FullLengthIsTerminal) {
  const ContestSpec spec = Spec({1, 1, 1}, {1, 1, 1}, Objective::kWinProbability);
  const TerminalStatus status = GetTerminalStatus(spec, Played(spec, {0, 1, 2}));
  ASSERT_TRUE(status.terminal());
  EXPECT_EQ(status.winners(), (std::vector<int>{0, 1, 2}));
}

TEST(TerminalStatusTest, NeverClinchesOnExactTie) {
  testing_support::ForEachWinnerSequence(
      Spec({1, 2, 1, 2}, {1, 1}, Objective::kWinProbability),
      [](const ContestSpec& spec, const History& history) {
        const TerminalStatus status = GetTerminalStatus(spec, history);
        if (!status.terminal() || history.length() == spec.num_battles()) return;
        const auto totals = history.ValueTotals(2);
        const int leader = status.winners()[0];
        EXPECT_GT(totals[leader],
                  totals[1 - leader] + spec.RemainingValue(history.length()));
      });
}

TEST(TerminalPayoffTest, TieIsSplit) {
  const ContestSpec spec = Spec({1, 1, 1, 1}, {1, 1}, Objective::kWinProbability);
  EXPECT_EQ(TerminalPayoff(spec, Played(spec, {0, 1, 0, 1})),
            (PayoffVector{0.5, 0.5}));
}

TEST(TerminalPayoffTest, ExpectedValueSumsWins) {
  const ContestSpec spec = Spec({1, 1, 1}, {1, 1});
  EXPECT_EQ(TerminalPayoff(spec, Played(spec, {0, 1, 1})), (PayoffVector{1, 2}));
}

TEST(TerminalPayoffTest, SweepWinsEverything) {
  const ContestSpec spec = Spec({1, 2, 2}, {1, 1, 1});
  EXPECT_EQ(TerminalPayoff(spec, Played(spec, {2, 2, 2})), (PayoffVector{0, 0, 5}));
}

TEST(TerminalPayoffTest, RejectsOngoingHistory) {
  const ContestSpec spec = Spec({1, 1, 1}, {1, 1});
  EXPECT_THROW(TerminalPayoff(spec, Played(spec, {0})), ContractError);
}

TEST(TerminalPayoffTest, ComponentsSumToTotal) {
  for (Objective objective : {Objective::kExpectedValue, Objective::kWinProbability}) {
    testing_support::ForEachWinnerSequence(
        Spec({1, 2, 1.5, 2}, {1, 1, 1}, objective),
        [&](const ContestSpec& spec, const History& history) {
          if (!GetTerminalStatus(spec, history).terminal()) return;
          double total = 0.0;
          for (double v : TerminalPayoff(spec, history)) total += v;
          EXPECT_NEAR(total,
                      objective == Objective::kWinProbability ? 1.0 : spec.TotalValue(),
                      kTol);
        });
  }
}

TEST(GuaranteedLoserTest, TieReachableIsNotLosing) {
  const ContestSpec spec = Spec({1, 1, 1, 3}, {1, 1}, Objective::kWinProbability);
  EXPECT_FALSE(IsGuaranteedLoser(spec, Played(spec, {0, 0, 0}), 1));
}

TEST(GuaranteedLoserTest, OneBattleIn) {
  const ContestSpec spec = Spec({2, 1, 1, 1}, {1, 1}, Objective::kWinProbability);
  EXPECT_FALSE(IsGuaranteedLoser(spec, Played(spec, {0}), 1));
}

TEST(GuaranteedLoserTest, ThirdPlayerOutOfReach) {
  const ContestSpec spec = Spec({2, 2, 1, 1}, {1, 1, 1}, Objective::kWinProbability);
  const History history = Played(spec, {0, 1, 0});
  EXPECT_TRUE(IsGuaranteedLoser(spec, history, 2));
  EXPECT_FALSE(IsGuaranteedLoser(spec, history, 1));
}

TEST(GuaranteedLoserTest, AgreesWithEnumeration) {
  // A guaranteed loser never finishes among the leaders, whatever happens.
  testing_support::ForEachWinnerSequence(
      Spec({2, 2, 1, 1}, {1, 1, 1}, Objective::kWinProbability),
      [](const ContestSpec& spec, const History& history) {
        if (GetTerminalStatus(spec, history).terminal()) return;
        for (int i = 0; i < 3; ++i) {
          bool can_lead = false;
          testing_support::ForEachCompletion(
              spec, history, [&](const History& full) {
                const TerminalStatus status = GetTerminalStatus(spec, full);
                for (int w : status.winners()) {
                  can_lead = can_lead || w == i;
                }
              });
          EXPECT_EQ(IsGuaranteedLoser(spec, history, i), !can_lead);
        }
      });
}

TEST(GuaranteedLoserTest, UndefinedForExpectedValueAndTerminal) {
  const ContestSpec ev = Spec({1, 1, 1}, {1, 1});
  EXPECT_THROW(IsGuaranteedLoser(ev, History(), 0), ContractError);
  const ContestSpec wp = Spec({2, 1, 1, 1}, {1, 1}, Objective::kWinProbability);
  EXPECT_THROW(IsGuaranteedLoser(wp, Played(wp, {0, 0}), 1), ContractError);
}

TEST(HistoryTest, RejectsBattlesAfterTheEnd) {
  const ContestSpec spec = Spec({2, 1, 1, 1}, {1, 1}, Objective::kWinProbability);
  EXPECT_THROW(ValidateHistory(spec, Played(spec, {0, 0, 1})), InputError);
}

TEST(HistoryTest, RejectsWrongWonValue) {
  const ContestSpec spec = Spec({1, 1, 1}, {1, 1});
  History history;
  const double spends[] = {0, 0};
  history.Append(spends, 0, 2.0);
  EXPECT_THROW(ValidateHistory(spec, history), InputError);
}

TEST(HistoryTest, TruncateRestoresPrefixTotals) {
  const ContestSpec spec = Spec({1, 2, 3}, {10, 10});
  History history;
  const double a[] = {1, 2};
  const double b[] = {3, 1};
  history.Append(a, 0, 1);
  const History prefix = history;
  history.Append(b, 1, 2);
  EXPECT_EQ(history.spent(0), 4.0);
  EXPECT_EQ(history.won(1), 2.0);
  history.Truncate(1);
  EXPECT_EQ(history, prefix);
  EXPECT_EQ(history.spent(0), 1.0);
}

TEST(HistoryTest, PlayerLabels) {
  EXPECT_EQ(PlayerLabel(0), "A");
  EXPECT_EQ(PlayerLabel(25), "Z");
  EXPECT_EQ(PlayerLabel(26), "P26");
}

}  // namespace
}  // namespace blotto
