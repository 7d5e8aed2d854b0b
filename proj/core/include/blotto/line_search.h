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

#ifndef BLOTTO_LINE_SEARCH_H_
#define BLOTTO_LINE_SEARCH_H_

#include <functional>

namespace blotto {

struct LineMaximum {
  double argmax = 0.0;
  double value = 0.0;
  bool flat = false;  // every grid point scored the same
};

// Golden-section search for a maximum of a unimodal f on [lo, hi], stopping
// once the bracket is narrower than `tolerance`.
LineMaximum GoldenSectionMaximize(const std::function<double(double)>& f,
                                  double lo, double hi, double tolerance);

// Evaluates f on `grid_points` evenly spaced points of [lo, hi], then refines
// around the best one by golden-section search. Ties go to the smaller
// argument.
LineMaximum GridGoldenMaximize(const std::function<double(double)>& f,
                               double lo, double hi, int grid_points,
                               double tolerance);

}  // namespace blotto

#endif  // BLOTTO_LINE_SEARCH_H_
