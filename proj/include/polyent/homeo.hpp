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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyent/space.hpp"

namespace polyent {

enum class Orientation { Preserving, Reversing };

struct Breakpoint {
  double x;
  double y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A piecewise-linear homeomorphism of [0,1] or of the circle.
///
/// Breakpoints run from x = 0 to x = 1. For the interval they are the graph
/// itself. For the circle they describe one period of a lift G with
/// G(x + 1) = G(x) + 1 (preserving) or G(x) - 1 (reversing); images are read
/// modulo 1. Construction does not validate; see validate().
class Homeo1D {
 public:
  Homeo1D(Space space, Orientation orientation, std::vector<Breakpoint> bps);

  static Homeo1D interval(std::vector<Breakpoint> bps,
                          Orientation o = Orientation::Preserving) {
    return {Space::Interval, o, std::move(bps)};
  }
  static Homeo1D circle(std::vector<Breakpoint> bps,
                        Orientation o = Orientation::Preserving) {
    return {Space::Circle, o, std::move(bps)};
  }
  static Homeo1D identity(Space s) {
    return {s, Orientation::Preserving, {{0.0, 0.0}, {1.0, 1.0}}};
  }

  Space space() const noexcept { return space_; }
  Orientation orientation() const noexcept { return orientation_; }
  int degree() const noexcept {
    return orientation_ == Orientation::Preserving ? 1 : -1;
  }
  std::span<const Breakpoint> breakpoints() const noexcept { return bps_; }

  /// Image of x without domain checks. Interval inputs must lie in [0,1];
  /// circle inputs may be any real (they are reduced through the lift).
  double operator()(double x) const noexcept {
    return space_ == Space::Interval ? segment_value(x) : wrap01(lift(x));
  }

  /// The lift evaluated at any real x (circle), or the map itself (interval).
  double lift(double x) const noexcept;

  friend bool operator==(const Homeo1D&, const Homeo1D&) = default;

 private:
  double segment_value(double x) const noexcept;

  Space space_;
  Orientation orientation_;
  std::vector<Breakpoint> bps_;
};

/// A broken Homeo1D invariant. `index` names the breakpoint (or the segment
/// starting there) that is responsible, or -1 for whole-map problems.
struct Violation {
  int index;
  std::string message;
};

std::vector<Violation> validate(const Homeo1D& f);
void require_valid(const Homeo1D& f);

/// f(x); throws DomainError for interval inputs outside [0,1].
double eval(const Homeo1D& f, double x);
Homeo1D invert(const Homeo1D& f);
/// g o f.
Homeo1D compose(const Homeo1D& g, const Homeo1D& f);
/// f^m for m >= 1.
Homeo1D power(const Homeo1D& f, int m);
/// f^n(x); negative n iterates the inverse.
double iterate(const Homeo1D& f, double x, std::int64_t n);

/// Exact solutions of f(x) = x in increasing order (circle: in [0,1)).
std::vector<double> fixed_points(const Homeo1D& f);

/// The interval map on [0,1] affinely conjugate to f on [a, b], where a and b
/// are fixed points of the orientation-preserving map f. On the circle b may
/// exceed 1 (up to a + 1) to describe an arc through 0.
Homeo1D restrict_to(const Homeo1D& f, double a, double b);

struct OrbitLimit {
  double forward;
  double backward;
};

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::int64_t kDefaultHorizon = 4096;

/// The fixed points approached by the forward and backward orbit of x.
/// Orientation-reversing maps are replaced by f^2. Throws ConvergenceError
/// when either orbit is not within tol of a fixed point after `horizon`
/// steps.
OrbitLimit orbit_limits(const Homeo1D& f, double x, double tol = kDefaultTol,
                        std::int64_t horizon = kDefaultHorizon);

}  // namespace polyent
