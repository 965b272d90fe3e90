// Copyright 2026 The polyent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

namespace polyent {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double sse = 0.0;
};

/// Ordinary least squares y = intercept + slope * x. Requires >= 2 points.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

struct GrowthPoint {
  int n = 0;
  double count = 0.0;
};

/// Number of leading points kept before a saturation plateau: once the
/// count has grown at least once, a run of three equal counts ends the
/// usable range at the first point of the run.
std::size_t usable_prefix(std::span<const GrowthPoint> pts);

struct GrowthFit {
  /// Exponent b in count ~ a * (n + n0)^b.
  double slope = 0.0;
  double n0 = 0.0;
  double r2 = 0.0;
  /// Plain log-log slope of the usable points (n0 = 0).
  double plain_slope = 0.0;
  double plain_r2 = 0.0;
  std::size_t used = 0;
  bool saturated = false;
  /// True when the count never grows; the slope is then 0.
  bool flat = false;
};

/// Fits log count against log(n + n0), choosing n0 in [0, n_first] by
/// profile least squares. With fewer than 4 usable points n0 stays 0.
/// Throws EstimationError when fewer than 3 usable points remain.
GrowthFit fit_growth(std::span<const GrowthPoint> pts);

}  // namespace polyent
