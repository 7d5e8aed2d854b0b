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

#include "blotto/line_search.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace blotto {

LineMaximum GoldenSectionMaximize(const std::function<double(double)>& f,
                                  double lo, double hi, double tolerance) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tolerance) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? LineMaximum{c, fc, false} : LineMaximum{d, fd, false};
}

LineMaximum GridGoldenMaximize(const std::function<double(double)>& f,
                               double lo, double hi, int grid_points,
                               double tolerance) {
  if (!(hi > lo)) return {lo, f(lo), false};
  grid_points = std::max(grid_points, 3);
  const double step = (hi - lo) / (grid_points - 1);
  std::vector<double> scores(grid_points);
  int best = 0;
  for (int k = 0; k < grid_points; ++k) {
    const double x = k == grid_points - 1 ? hi : lo + step * k;
    scores[k] = f(x);
    if (scores[k] > scores[best]) best = k;
  }
  const auto [lowest, highest] = std::minmax_element(scores.begin(), scores.end());
  if (*highest == *lowest) return {lo, scores[0], true};

  const double grid_x = best == grid_points - 1 ? hi : lo + step * best;
  LineMaximum result{grid_x, scores[best], false};
  const double left = lo + step * std::max(best - 1, 0);
  const double right = best + 1 >= grid_points - 1 ? hi : lo + step * (best + 1);
  const LineMaximum refined = GoldenSectionMaximize(f, left, right, tolerance);
  if (refined.value > result.value) result = refined;
  // The golden bracket never evaluates its endpoints; a boundary optimum
  // shows up as a grid endpoint.
  return result;
}

}  // namespace blotto
