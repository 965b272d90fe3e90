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

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "polyent/hyperpoint.hpp"

namespace polyent {

/// Geometric refinement of a sampling axis toward anchor points (normally
/// the fixed points of the map). Near a hyperbolic fixed point an orbit
/// needs time ~ log(1/offset) to leave, so a uniform grid only resolves
/// transit times up to ~ log(1/step); anchoring `per_decade` points per
/// factor of ten down to `min_offset` extends that range to
/// ~ log(1/min_offset). per_decade == 0 disables refinement.
struct Grading {
  std::vector<double> anchors;
  int per_decade = 0;
  double min_offset = 1e-14;
};

/// Sorted, duplicate-free samples of [lo, hi] at spacing `step`, plus the
/// graded offsets around every anchor inside the range.
std::vector<double> graded_axis(double lo, double hi, double step, const Grading& g = {});

enum class RegionKind {
  Axis,       ///< X itself, as singletons of X^{*1}
  Triangle,   ///< C(I) as {(x,y) : x <= y}
  AkSimplex,  ///< sets {x_1 <= ... <= x_k}, i.e. all of X^{*k} on the grid
  AkStrict,   ///< sets with exactly k distinct points
  CircleA,    ///< arcs [x->y] with x between a and y counterclockwise
  CircleB,    ///< arcs [x->y] containing a
  Dij         ///< arcs with from in C_i and to in C_j
};

struct RegionSpec {
  RegionKind kind = RegionKind::Axis;
  Space space = Space::Interval;
  int k = 1;
  /// Distinguished fixed point for CircleA / CircleB.
  double a = 0.0;
  /// Coordinate range for Axis, Triangle, AkSimplex and AkStrict.
  double lo = 0.0;
  double hi = 1.0;
  /// Arcs {from, to} (counterclockwise) between consecutive fixed points,
  /// for Dij.
  std::array<double, 2> ci{0.0, 1.0};
  std::array<double, 2> cj{0.0, 1.0};
};

std::string region_tag(const RegionSpec& r);

/// A finite sample of a region of a hyperspace. Points are pairwise
/// distinct; their order carries no meaning.
struct SampleCloud {
  std::string tag;
  Space space = Space::Interval;
  int k = 1;
  double resolution = 0.0;
  std::vector<HyperPoint> points;
};

/// Fills `region` on the grid of spacing `resolution` (refined by
/// `grading`). The uniform part of AkStrict keeps pairwise gaps of at least
/// `resolution`; graded points may be closer. Throws DomainError when
/// resolution <= 0 or no point is produced.
SampleCloud sample_region(const RegionSpec& region, double resolution, const Grading& grading = {});

/// Membership predicates of the sets A and B of arcs around a.
bool in_circle_a(const HyperPoint& p, double a) noexcept;
bool in_circle_b(const HyperPoint& p, double a) noexcept;

// CSV layout:
//   tag,space,k,resolution
//   triangle,interval,1,0.005
//   point
//   I:0:0.5
void write_cloud_csv(const SampleCloud& cloud, const std::filesystem::path& file);
SampleCloud read_cloud_csv(const std::filesystem::path& file);

}  // namespace polyent
