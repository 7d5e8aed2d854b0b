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

#include "blotto/equilibrium.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "blotto/errors.h"
#include "blotto/line_search.h"

namespace blotto {
namespace {

using Pair = std::array<double, 2>;

// Residuals this small are rounding noise in the stage payoff.
constexpr double kNoiseResidual = 1e-14;

void RequireTwoPlayerWinProbability(const ContestSpec& spec, const char* what) {
  if (spec.num_players() != 2) {
    throw ContractError(std::string(what) + " needs exactly two players");
  }
  if (spec.objective != Objective::kWinProbability) {
    throw ContractError(std::string(what) +
                        " needs the win-probability objective");
  }
}

Pair TwoPlayerProbabilities(double w0, double w1, const CsfParams& csf) {
  if (w0 <= 0.0 && w1 <= 0.0) return {0.5, 0.5};
  double f0 = w0;
  double f1 = w1;
  if (csf.alpha != 1.0) {
    const double top = std::max(w0, w1);
    f0 = std::pow(w0 / top, csf.alpha);
    f1 = std::pow(w1 / top, csf.alpha);
  }
  const double p0 = f0 / (f0 + f1);
  return {p0, 1.0 - p0};
}

struct Response {
  double x = 0.0;
  double value = 0.0;
  bool flat = false;
};

template <typename Payoff>
Response Respond(const Payoff& payoff, int player, double other, double cap,
                 double fallback, const SolverSettings& settings) {
  auto f = [&](double w) {
    return player == 0 ? payoff(w, other)[0] : payoff(other, w)[1];
  };
  if (!(cap > 0.0)) return {0.0, f(0.0), false};
  const LineMaximum best = GridGoldenMaximize(f, 0.0, cap, settings.grid_points,
                                              settings.spend_tolerance);
  if (best.flat) {
    const double x = std::clamp(fallback, 0.0, cap);
    return {x, f(x), true};
  }
  return {best.argmax, best.value, false};
}

struct Probe {
  Pair w{};
  Pair current{};
  std::array<Response, 2> response{};
  double residual = 0.0;
  double displacement = 0.0;
  bool flat = false;
};

template <typename Payoff>
Probe ProbeAt(const Payoff& payoff, Pair w, Pair caps, Pair fallback,
              const SolverSettings& settings) {
  Probe probe;
  probe.w = w;
  probe.current = payoff(w[0], w[1]);
  for (int i = 0; i < 2; ++i) {
    probe.response[i] =
        Respond(payoff, i, w[1 - i], caps[i], fallback[i], settings);
    probe.residual = std::max(
        probe.residual, probe.response[i].value - probe.current[i]);
    probe.displacement = std::max(
        probe.displacement, std::abs(probe.response[i].x - w[i]));
    probe.flat = probe.flat || probe.response[i].flat;
  }
  return probe;
}

// Each player's spend maximising its payoff against the opponent's best
// reply. In a constant-sum stage with a saddle point this is the saddle.
template <typename Payoff>
Pair SecurityPoint(const Payoff& payoff, Pair caps, Pair fallback,
                   const SolverSettings& settings) {
  Pair point{0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    auto guaranteed = [&](double w) {
      const Response reply =
          Respond(payoff, 1 - i, w, caps[1 - i], fallback[1 - i], settings);
      return i == 0 ? payoff(w, reply.x)[0] : payoff(reply.x, w)[1];
    };
    if (!(caps[i] > 0.0)) continue;
    const LineMaximum best = GridGoldenMaximize(
        guaranteed, 0.0, caps[i], settings.grid_points, settings.spend_tolerance);
    point[i] = best.flat ? std::clamp(fallback[i], 0.0, caps[i]) : best.argmax;
  }
  return point;
}

// Damped simultaneous best responses. A step towards the best responses is
// accepted only if it lowers the residual; otherwise the step length halves.
template <typename Payoff>
StageSolution SolveStage(const Payoff& payoff, Pair caps, Pair start,
                         const SolverSettings& settings) {
  const double displacement_tolerance =
      settings.spend_tolerance * std::max(1.0, caps[0] + caps[1]);
  Probe probe = ProbeAt(payoff, start, caps, start, settings);
  StageSolution solution;
  solution.degenerate = probe.flat;
  solution.residual_trace.push_back(probe.residual);
  double step = 1.0;
  int iterations = 0;
  bool tried_security = false;
  auto converged = [&](const Probe& p) {
    return p.residual <= settings.tolerance &&
           (p.displacement <= displacement_tolerance ||
            p.residual <= kNoiseResidual);
  };
  while (!converged(probe)) {
    if (iterations >= settings.max_iterations || step < 1e-12) {
      if (probe.residual <= settings.tolerance) break;
      if (!tried_security && iterations < settings.max_iterations) {
        // Best-response steps can stall away from a saddle point; restart
        // from both players' security strategies.
        tried_security = true;
        Probe candidate = ProbeAt(payoff, SecurityPoint(payoff, caps, start, settings),
                                  caps, start, settings);
        if (candidate.residual < probe.residual) {
          probe = candidate;
          solution.degenerate = solution.degenerate || probe.flat;
          solution.residual_trace.push_back(probe.residual);
          step = 1.0;
          continue;
        }
      }
      std::ostringstream os;
      os << "stage equilibrium did not converge after " << iterations
         << " iterations (residual " << probe.residual << ")";
      throw ConvergenceError(os.str(), {probe.w[0], probe.w[1]},
                             probe.residual);
    }
    ++iterations;
    Pair next;
    for (int i = 0; i < 2; ++i) {
      next[i] = std::clamp(
          probe.w[i] + step * (probe.response[i].x - probe.w[i]), 0.0, caps[i]);
    }
    Probe candidate = ProbeAt(payoff, next, caps, start, settings);
    if (candidate.residual < probe.residual) {
      probe = candidate;
      solution.degenerate = solution.degenerate || probe.flat;
      solution.residual_trace.push_back(probe.residual);
      step = std::min(1.0, step * 2.0);
    } else {
      step *= 0.5;
    }
  }
  solution.allocations = {probe.w[0], probe.w[1]};
  solution.values = {probe.current[0], probe.current[1]};
  solution.residual = std::max(probe.residual, 0.0);
  solution.iterations = iterations;
  solution.degenerate =
      solution.degenerate || probe.displacement > displacement_tolerance;
  return solution;
}

// Four-point Lagrange interpolation on a uniform grid over [0, 1].
double CubicLookup(const std::vector<double>& values, double share) {
  const int intervals = static_cast<int>(values.size()) - 1;
  if (intervals < 3) {
    const double x = std::clamp(share, 0.0, 1.0) * intervals;
    const int k = std::min(static_cast<int>(x), intervals - 1);
    return values[k] + (x - k) * (values[k + 1] - values[k]);
  }
  const double x = std::clamp(share, 0.0, 1.0) * intervals;
  const int cell = std::min(static_cast<int>(x), intervals - 1);
  const int first = std::clamp(cell - 1, 0, intervals - 3);
  double result = 0.0;
  for (int a = 0; a < 4; ++a) {
    double weight = 1.0;
    for (int b = 0; b < 4; ++b) {
      if (a != b) weight *= (x - (first + b)) / static_cast<double>(a - b);
    }
    result += weight * values[first + a];
  }
  return result;
}

// Payoff of player 0 if the contest is over with these standings after
// `played` battles.
std::optional<double> TerminalValue(const ContestSpec& spec, int played,
                                    const std::vector<double>& standings) {
  const double remaining = spec.RemainingValue(played);
  for (int i = 0; i < 2; ++i) {
    if (standings[i] > standings[1 - i] + remaining) return i == 0 ? 1.0 : 0.0;
  }
  if (played < spec.num_battles()) return std::nullopt;
  if (standings[0] == standings[1]) return 0.5;
  return standings[0] > standings[1] ? 1.0 : 0.0;
}

std::vector<double> AfterWin(std::vector<double> standings, int winner,
                             double value) {
  for (size_t i = 0; i < standings.size(); ++i) {
    standings[i] = standings[i] + (static_cast<int>(i) == winner ? value : 0.0);
  }
  return standings;
}

// Value of a successor state as a function of the remaining budgets.
struct Successor {
  std::optional<double> terminal;
  const StageTable* table = nullptr;
  double zero_budget_value = 0.5;

  double Value(double a, double b) const {
    if (terminal) return *terminal;
    a = std::max(a, 0.0);
    b = std::max(b, 0.0);
    const double total = a + b;
    if (total <= 0.0) return zero_budget_value;
    return std::clamp(CubicLookup(table->values, a / total), 0.0, 1.0);
  }
};

// Player 0's equilibrium values, tabulated on demand per (battle, standings)
// over player 0's share of the combined budget. The contest success function
// is homogeneous of degree zero, so scaling both budgets leaves values and
// spend fractions unchanged.
class ValueModel {
 public:
  ValueModel(const ContestSpec& spec, const SolverSettings& settings,
             double total_budget)
      : spec_(spec), settings_(settings) {
    spec_.shocks.clear();
    total_ = total_budget > 0.0 ? total_budget : 1.0;
    const double step = settings.budget_step > 0.0 ? settings.budget_step : 0.25;
    intervals_ = static_cast<int>(
        std::clamp(std::round(total_ / step), 8.0, 20000.0));
  }

  Successor Resolve(int played, const std::vector<double>& standings) {
    Successor successor;
    successor.terminal = TerminalValue(spec_, played, standings);
    if (successor.terminal) return successor;
    successor.table = &Table(played, standings);
    successor.zero_budget_value = ZeroBudgetValue(played, standings);
    return successor;
  }

  Successor Lookup(int played, const std::vector<double>& standings) const {
    Successor successor;
    successor.terminal = TerminalValue(spec_, played, standings);
    if (successor.terminal) return successor;
    const StageKey key{played, standings};
    auto it = tables_.find(key);
    if (it == tables_.end()) throw ContractError("continuation state was not solved");
    successor.table = &it->second;
    successor.zero_budget_value = zero_values_.at(key);
    return successor;
  }

  // Stage payoff of the battle `played` at the given standings.
  auto StagePayoff(const Successor& if_0_wins, const Successor& if_1_wins,
                   double a, double b) const {
    return [this, if_0_wins, if_1_wins, a, b](double w0, double w1) -> Pair {
      const Pair p = TwoPlayerProbabilities(w0, w1, spec_.csf);
      const double v = p[0] * if_0_wins.Value(a - w0, b - w1) +
                       p[1] * if_1_wins.Value(a - w0, b - w1);
      return {v, 1.0 - v};
    };
  }

  StageSolution SolveState(int played, const std::vector<double>& standings,
                           double a, double b, const ContestSpec& actual) {
    CountSolve();
    const double x = spec_.values[played];
    const Successor win0 = Resolve(played + 1, AfterWin(standings, 0, x));
    const Successor win1 = Resolve(played + 1, AfterWin(standings, 1, x));
    const double share = x / actual.RemainingValue(played);
    return SolveStage(StagePayoff(win0, win1, a, b), Pair{a, b},
                      Pair{a * share, b * share}, settings_);
  }

  const StageTable& Table(int played, const std::vector<double>& standings) {
    const StageKey key{played, standings};
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    StageTable table;
    table.shares.resize(intervals_ + 1);
    table.fractions.assign(2, std::vector<double>(intervals_ + 1, 0.0));
    table.values.resize(intervals_ + 1);
    for (int k = 0; k <= intervals_; ++k) {
      const double share = static_cast<double>(k) / intervals_;
      const double a = k == intervals_ ? total_ : total_ * share;
      const double b = total_ - a;
      StageSolution stage;
      try {
        stage = SolveState(played, standings, a, b, spec_);
      } catch (const ConvergenceError& e) {
        // Off-path grid points keep the last iterate; on-path stages are
        // re-solved exactly and still report failures.
        ++unconverged_points_;
        stage.allocations = e.last_iterate();
        const Successor win0 = Resolve(played + 1, AfterWin(standings, 0, spec_.values[played]));
        const Successor win1 = Resolve(played + 1, AfterWin(standings, 1, spec_.values[played]));
        stage.values = {StagePayoff(win0, win1, a, b)(stage.allocations[0],
                                                      stage.allocations[1])[0]};
      }
      table.shares[k] = share;
      table.fractions[0][k] = stage.allocations[0] / total_;
      table.fractions[1][k] = stage.allocations[1] / total_;
      table.values[k] = stage.values[0];
    }
    zero_values_[key] = ZeroBudgetValue(played, standings);
    return tables_.emplace(key, std::move(table)).first->second;
  }

  double ZeroBudgetValue(int played, const std::vector<double>& standings) const {
    if (auto terminal = TerminalValue(spec_, played, standings)) return *terminal;
    const double x = spec_.values[played];
    return 0.5 * ZeroBudgetValue(played + 1, AfterWin(standings, 0, x)) +
           0.5 * ZeroBudgetValue(played + 1, AfterWin(standings, 1, x));
  }

  // Tabulates every (battle, standings) the contest can reach.
  void SolveAllReachable(int played, const std::vector<double>& standings) {
    if (TerminalValue(spec_, played, standings)) return;
    const double x = spec_.values[played];
    SolveAllReachable(played + 1, AfterWin(standings, 0, x));
    SolveAllReachable(played + 1, AfterWin(standings, 1, x));
    Table(played, standings);
  }

  void CountSolve() {
    if (++stage_solves_ > settings_.max_stage_solves) {
      throw ResourceError("backward induction exceeded " +
                          std::to_string(settings_.max_stage_solves) +
                          " stage solves");
    }
  }

  const TabularStrategy::Tables& tables() const { return tables_; }
  std::uint64_t stage_solves() const { return stage_solves_; }
  int unconverged_points() const { return unconverged_points_; }

 private:
  ContestSpec spec_;
  SolverSettings settings_;
  double total_ = 1.0;
  int intervals_ = 8;
  TabularStrategy::Tables tables_;
  std::map<StageKey, double> zero_values_;
  std::uint64_t stage_solves_ = 0;
  int unconverged_points_ = 0;
};

// Stage payoff at a concrete history with a caller-supplied continuation.
auto HistoryStagePayoff(const ContestSpec& spec, const History& history,
                        const Continuation& continuation) {
  return [&spec, &history, &continuation](double w0, double w1) -> Pair {
    const double spends[] = {w0, w1};
    const Pair p = TwoPlayerProbabilities(w0, w1, spec.csf);
    Pair total{0.0, 0.0};
    History successor = history;
    for (int winner = 0; winner < 2; ++winner) {
      if (p[winner] == 0.0) continue;
      successor.Append(spends, winner, spec.values[history.length()]);
      const PayoffVector payoff =
          GetTerminalStatus(spec, successor).terminal()
              ? TerminalPayoff(spec, successor)
              : continuation(successor);
      total[0] += p[winner] * payoff[0];
      total[1] += p[winner] * payoff[1];
      successor.Pop();
    }
    return total;
  };
}

void RequireNonterminal(const ContestSpec& spec, const History& history) {
  ValidateHistory(spec, history);
  if (GetTerminalStatus(spec, history).terminal()) {
    throw ContractError("stage problem at a terminal history");
  }
}

}  // namespace

BestResponseResult BestResponse(const ContestSpec& spec, const History& history,
                                int player, std::span<const double> allocations,
                                const Continuation& continuation,
                                const SolverSettings& settings) {
  RequireTwoPlayerWinProbability(spec, "best response");
  RequireNonterminal(spec, history);
  if (player < 0 || player > 1 || allocations.size() != 2) {
    throw InputError("best response needs a player index and two allocations");
  }
  const auto payoff = HistoryStagePayoff(spec, history, continuation);
  const double cap = RemainingBudgetUnchecked(spec, history, player);
  const double proportional = ProportionalStrategy().Allocate(spec, history, player);
  const Response response = Respond(payoff, player, allocations[1 - player], cap,
                                    proportional, settings);
  return {response.x, response.value, response.flat};
}

StageSolution StageEquilibrium(const ContestSpec& spec, const History& history,
                               const Continuation& continuation,
                               const SolverSettings& settings) {
  RequireTwoPlayerWinProbability(spec, "stage equilibrium");
  RequireNonterminal(spec, history);
  const auto payoff = HistoryStagePayoff(spec, history, continuation);
  const Pair caps{RemainingBudgetUnchecked(spec, history, 0),
                  RemainingBudgetUnchecked(spec, history, 1)};
  const ProportionalStrategy proportional;
  const Pair start{std::clamp(proportional.Allocate(spec, history, 0), 0.0, caps[0]),
                   std::clamp(proportional.Allocate(spec, history, 1), 0.0, caps[1])};
  StageSolution solution = SolveStage(payoff, caps, start, settings);
  solution.history = history;
  return solution;
}

Continuation RecursiveContinuation(const ContestSpec& spec,
                                   const SolverSettings& settings) {
  return [spec, settings](const History& successor) -> PayoffVector {
    return StageEquilibrium(spec, successor,
                            RecursiveContinuation(spec, settings), settings)
        .values;
  };
}

BackwardSolution SolveBackward(const ContestSpec& spec,
                               const SolverSettings& settings,
                               const History& root) {
  RequireTwoPlayerWinProbability(spec, "backward induction");
  if (spec.num_battles() > 5) {
    throw ContractError("backward induction supports at most five battles");
  }
  ValidateHistory(spec, root);
  const History start;
  const double a = RemainingBudgetUnchecked(spec, start, 0);
  const double b = RemainingBudgetUnchecked(spec, start, 1);
  auto model = std::make_shared<ValueModel>(spec, settings, a + b);
  const std::vector<double> zeros(2, 0.0);
  model->SolveAllReachable(0, zeros);

  BackwardSolution solution;
  // Breadth-first over equilibrium play, parents before children.
  std::deque<std::pair<History, double>> frontier;
  if (!GetTerminalStatus(spec, root).terminal()) frontier.emplace_back(root, 1.0);
  while (!frontier.empty()) {
    auto [history, reach] = std::move(frontier.front());
    frontier.pop_front();
    const int played = history.length();
    const std::vector<double> standings = history.ValueTotals(2);
    StageSolution stage = model->SolveState(
        played, standings, RemainingBudgetUnchecked(spec, history, 0),
        RemainingBudgetUnchecked(spec, history, 1), spec);
    stage.history = history;
    const Pair p = TwoPlayerProbabilities(stage.allocations[0],
                                          stage.allocations[1], spec.csf);
    for (int winner = 0; winner < 2; ++winner) {
      if (p[winner] == 0.0) continue;
      History next = history;
      next.Append(stage.allocations, winner, spec.values[played]);
      if (!GetTerminalStatus(spec, next).terminal()) {
        frontier.emplace_back(std::move(next), reach * p[winner]);
      }
    }
    if (played == root.length()) solution.value = stage.values;
    solution.path.push_back(PathNode{std::move(history), reach, std::move(stage)});
  }
  if (solution.value.empty()) {
    solution.value = TerminalPayoff(spec, root);
  }

  auto tables = std::make_shared<const TabularStrategy::Tables>(model->tables());
  auto tabular = std::make_shared<const TabularStrategy>(tables);
  solution.tables = tables;
  solution.profile = StrategyProfile({tabular, tabular});
  solution.stage_solves = model->stage_solves();
  solution.unconverged_table_points = model->unconverged_points();
  std::shared_ptr<const ValueModel> frozen = model;
  solution.continuation = [frozen, spec](const History& successor) -> PayoffVector {
    const Successor state =
        frozen->Lookup(successor.length(), successor.ValueTotals(2));
    const double v = state.Value(RemainingBudgetUnchecked(spec, successor, 0),
                                 RemainingBudgetUnchecked(spec, successor, 1));
    return {v, 1.0 - v};
  };
  return solution;
}

ProportionalityVerdict CheckProportionality(const ContestSpec& spec,
                                            const SamplingPlan& plan) {
  std::vector<History> histories = plan.histories;
  if (plan.include_reachable) {
    for (History& history : ProportionalReachableHistories(spec, plan.max_depth)) {
      histories.push_back(std::move(history));
    }
  }

  ProportionalityVerdict verdict;
  for (const History& history : histories) {
    ValidateHistory(spec, history);
    if (GetTerminalStatus(spec, history).terminal()) continue;
    ++verdict.checked_histories;
    for (int player = 0; player < spec.num_players(); ++player) {
      const std::vector<double> deltas =
          FeasibleDeltaGrid(spec, history, player, plan.delta_points);
      if (deltas.size() == 1 && deltas[0] == 0.0) continue;
      const std::vector<DeviationReport> reports =
          DeviationGains(spec, history, player, deltas, plan.evaluation);
      for (const DeviationReport& report : reports) {
        ++verdict.checked_deviations;
        verdict.max_gain = std::max(verdict.max_gain, report.gain);
        if (report.gain > plan.tolerance) {
          verdict.holds = false;
          verdict.counterexample = report;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace blotto
