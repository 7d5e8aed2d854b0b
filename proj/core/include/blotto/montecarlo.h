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

#ifndef BLOTTO_MONTECARLO_H_
#define BLOTTO_MONTECARLO_H_

// Seeded simulation of contests under a strategy profile.
//
// Trials are grouped in chunks of kTrialsPerChunk. Chunk c draws from its own
// std::mt19937_64 seeded with std::seed_seq{seed low word, seed high word, c},
// so results do not depend on the thread count. Winners are drawn by inverse
// CDF over the success probabilities in player order, using a 53-bit uniform
// taken from the top bits of each 64-bit output.

#include <cstdint>
#include <vector>

#include "blotto/contest.h"
#include "blotto/strategy.h"

namespace blotto {

inline constexpr std::int64_t kTrialsPerChunk = 1024;

struct SimulationOptions {
  int threads = 1;
};

struct SimulationResult {
  std::int64_t trials = 0;
  std::vector<double> mean;
  std::vector<double> standard_error;
  std::uint64_t seed = 0;
};

// Plays the contest from `history` `trials` times. Deterministic in
// (seed, trials, profile, spec, history).
SimulationResult Simulate(const StrategyProfile& profile, const ContestSpec& spec,
                          std::uint64_t seed, std::int64_t trials,
                          const History& history = {},
                          const SimulationOptions& options = {});

}  // namespace blotto

#endif  // BLOTTO_MONTECARLO_H_
