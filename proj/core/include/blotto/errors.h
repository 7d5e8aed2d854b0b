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

#ifndef BLOTTO_ERRORS_H_
#define BLOTTO_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace blotto {

// Base class for every error raised by the library.
class BlottoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller data: negative or non-finite spends, infeasible histories,
// out-of-budget deviations.
class InputError : public BlottoError {
 public:
  using BlottoError::BlottoError;
};

// An operation was called outside its domain (e.g. a payoff requested for a
// history that is not terminal).
class ContractError : public BlottoError {
 public:
  using BlottoError::BlottoError;
};

// Enumeration or recursion would exceed a configured budget.
class ResourceError : public BlottoError {
 public:
  using BlottoError::BlottoError;
};

// Iterated best responses failed to settle. Carries the last iterate.
class ConvergenceError : public BlottoError {
 public:
  ConvergenceError(const std::string& what, std::vector<double> last_iterate,
                   double residual)
      : BlottoError(what),
        last_iterate_(std::move(last_iterate)),
        residual_(residual) {}

  const std::vector<double>& last_iterate() const { return last_iterate_; }
  double residual() const { return residual_; }

 private:
  std::vector<double> last_iterate_;
  double residual_;
};

}  // namespace blotto

#endif  // BLOTTO_ERRORS_H_
