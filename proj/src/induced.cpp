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

#include "polyent/induced.hpp"

#include <bit>
#include <algorithm>

#include "polyent/error.hpp"

namespace polyent {

IntervalPt induce_continuum(const Homeo1D& f, const IntervalPt& a) noexcept {
  double lo = f(a.lo);
  double hi = f(a.hi);
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

Subarc induce_continuum(const Homeo1D& f, const Subarc& a) noexcept {
  if (a.full) return a;
  if (f.orientation() == Orientation::Preserving) return {f(a.from), f(a.to), false};
  return {f(a.to), f(a.from), false};
}

HyperPoint induce_continuum(const Homeo1D& f, const HyperPoint& a) {
  if (std::holds_alternative<FinitePt>(a))
    throw DomainError("induce_continuum: expected a continuum");
  if (const auto* iv = std::get_if<IntervalPt>(&a)) {
    if (f.space() != Space::Interval) throw DomainError("induce_continuum: interval on a circle map");
    return induce_continuum(f, *iv);
  }
  if (f.space() != Space::Circle) throw DomainError("induce_continuum: arc on an interval map");
  return to_hyperpoint(induce_continuum(f, to_subarc(a)));
}

FinitePt induce_symmetric(const Homeo1D& f, const FinitePt& s) noexcept {
  std::array<double, FinitePt::kMaxK> buf{};
  const int n = s.size();
  for (int i = 0; i < n; ++i) buf[i] = f(s[i]);
  // Interval preserving maps keep the order; everything else is re-sorted.
  if (!(f.space() == Space::Interval && f.orientation() == Orientation::Preserving))
    std::sort(buf.begin(), buf.begin() + n);
  int m = static_cast<int>(std::unique(buf.begin(), buf.begin() + n) - buf.begin());
  return FinitePt::from_sorted(buf.data(), m, s.k());
}

std::vector<HyperPoint> fixed_hyperpoints(const Homeo1D& f, HyperKind kind, int k) {
  const auto fix = fixed_points(f);
  std::vector<HyperPoint> out;
  const auto m = fix.size();
  if (kind == HyperKind::Continuum) {
    if (f.space() == Space::Interval) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) out.push_back(IntervalPt{fix[i], fix[j]});
    } else {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.push_back(ArcPt{fix[i], fix[j]});
      out.push_back(FullCircle{});
    }
    return out;
  }
  if (k < 1 || k > FinitePt::kMaxK) throw DomainError("fixed_hyperpoints: k out of range");
  if (m >= 31) throw DomainError("fixed_hyperpoints: too many fixed points to enumerate");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::array<double, FinitePt::kMaxK> buf{};
    int n = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) buf[n++] = fix[i];
    out.push_back(FinitePt::from_sorted(buf.data(), n, k));
  }
  return out;
}

}  // namespace polyent
