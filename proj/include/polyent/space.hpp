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

#include <cmath>
#include <string_view>

namespace polyent {

/// The phase space of a base map: [0,1] with |x-y|, or the circle [0,1)
/// with 0 ~ 1 and arc-length distance.
enum class Space { Interval, Circle };

constexpr std::string_view to_string(Space s) noexcept {
  return s == Space::Interval ? "interval" : "circle";
}

/// Reduces x to the fundamental domain [0,1) of the circle.
inline double wrap01(double x) noexcept {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

inline double circle_distance(double x, double y) noexcept {
  double d = std::fabs(wrap01(x) - wrap01(y));
  return d > 0.5 ? 1.0 - d : d;
}

inline double distance(Space s, double x, double y) noexcept {
  return s == Space::Interval ? std::fabs(x - y) : circle_distance(x, y);
}

}  // namespace polyent
