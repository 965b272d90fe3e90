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

#include <vector>

#include "polyent/homeo.hpp"
#include "polyent/hyperpoint.hpp"

namespace polyent {

/// C(f)(A): the image continuum. Intervals and arcs map endpoint-wise
/// (a reversing map swaps the endpoints); FullCircle is fixed.
HyperPoint induce_continuum(const Homeo1D& f, const HyperPoint& a);
IntervalPt induce_continuum(const Homeo1D& f, const IntervalPt& a) noexcept;
Subarc induce_continuum(const Homeo1D& f, const Subarc& a) noexcept;

/// f^{*k}(S): pointwise image, re-sorted. Homeomorphisms are injective so
/// the cardinality is preserved.
FinitePt induce_symmetric(const Homeo1D& f, const FinitePt& s) noexcept;

/// Fixed points of the induced map on C(X) (k ignored) or X^{*k}:
///  - C(I): all [a,b] with a <= b in Fix(f);
///  - C(S^1): fixed singletons, every arc between two distinct fixed
///    points (both orientations), and the full circle;
///  - X^{*k}: all nonempty subsets of Fix(f) with at most k elements.
std::vector<HyperPoint> fixed_hyperpoints(const Homeo1D& f, HyperKind kind, int k = 1);

}  // namespace polyent
