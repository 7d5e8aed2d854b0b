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

#include "blotto/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "blotto/errors.h"

namespace blotto {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct ChunkSums {
  std::vector<double> sum;
  std::vector<double> sum_squares;
};

double Uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int DrawWinner(const std::vector<double>& p, double u) {
  double cumulative = 0.0;
  int last_positive = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] <= 0.0) continue;
    cumulative += p[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // Rounding left the cumulative sum just below one.
  return last_positive;
}

ChunkSums RunChunk(const StrategyProfile& profile, const ContestSpec& spec,
                   const History& root, std::uint64_t seed, std::int64_t chunk,
                   std::int64_t trials) {
  const int n = spec.num_players();
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  ChunkSums sums{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  History history = root;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    history.Truncate(root.length());
    while (!GetTerminalStatus(spec, history).terminal()) {
      const std::vector<double> spends = AllocationsAt(profile, spec, history);
      const std::vector<double> p = CsfProbabilities(spends, spec.csf);
      history.Append(spends, DrawWinner(p, Uniform53(rng)),
                     spec.values[history.length()]);
    }
    const PayoffVector payoff = TerminalPayoff(spec, history);
    for (int i = 0; i < n; ++i) {
      sums.sum[i] += payoff[i];
      sums.sum_squares[i] += payoff[i] * payoff[i];
    }
  }
  return sums;
}

}  // namespace

SimulationResult Simulate(const StrategyProfile& profile, const ContestSpec& spec,
                          std::uint64_t seed, std::int64_t trials,
                          const History& history,
                          const SimulationOptions& options) {
  if (trials < 1) throw InputError("trials must be positive");
  if (profile.size() != spec.num_players()) {
    throw InputError("profile size does not match the player count");
  }
  ValidateHistory(spec, history);

  const std::int64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  std::vector<ChunkSums> results(chunks);
  auto run = [&](std::int64_t chunk) {
    const std::int64_t size =
        std::min(kTrialsPerChunk, trials - chunk * kTrialsPerChunk);
    results[chunk] = RunChunk(profile, spec, history, seed, chunk, size);
  };
  const int threads = static_cast<int>(
      std::clamp<std::int64_t>(options.threads, 1, chunks));
  if (threads == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run(c);
  } else {
    // Exceptions from strategies are rethrown on the calling thread.
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::int64_t c = w; c < chunks; c += threads) run(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const int n = spec.num_players();
  SimulationResult result;
  result.trials = trials;
  result.seed = seed;
  result.mean.resize(n);
  result.standard_error.resize(n);
  const double count = static_cast<double>(trials);
  for (int i = 0; i < n; ++i) {
    CompensatedSum sum;
    CompensatedSum squares;
    for (const ChunkSums& chunk : results) {
      sum.Add(chunk.sum[i]);
      squares.Add(chunk.sum_squares[i]);
    }
    const double mean = sum.value() / count;
    double variance = 0.0;
    if (trials > 1) {
      variance = std::max(0.0, (squares.value() - count * mean * mean) /
                                   (count - 1.0));
    }
    result.mean[i] = mean;
    result.standard_error[i] = std::sqrt(variance / count);
  }
  return result;
}

}  // namespace blotto
