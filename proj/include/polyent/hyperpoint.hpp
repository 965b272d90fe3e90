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

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "polyent/space.hpp"

namespace polyent {

/// A subcontinuum [lo, hi] of the interval; lo == hi is the singleton.
struct IntervalPt {
  double lo;
  double hi;
  friend bool operator==(const IntervalPt&, const IntervalPt&) = default;
};

/// The arc running counterclockwise from `from` to `to` on the circle.
/// from == to is the singleton {from}; the whole circle is FullCircle.
struct ArcPt {
  double from;
  double to;
  friend bool operator==(const ArcPt&, const ArcPt&) = default;
};

struct FullCircle {
  friend bool operator==(const FullCircle&, const FullCircle&) = default;
};

/// A nonempty set of at most `k` points, stored sorted and without
/// duplicates (the symmetric product identifies multisets with sets).
class FinitePt {
 public:
  static constexpr int kMaxK = 8;

  FinitePt() = default;
  FinitePt(std::span<const double> pts, int k);
  FinitePt(std::initializer_list<double> pts, int k)
      : FinitePt(std::span<const double>(pts.begin(), pts.size()), k) {}
  static FinitePt singleton(double x) { return FinitePt({x}, 1); }

  int size() const noexcept { return size_; }
  int k() const noexcept { return k_; }
  std::span<const double> points() const noexcept {
    return {pts_.data(), static_cast<std::size_t>(size_)};
  }
  double operator[](int i) const noexcept { return pts_[i]; }
  double front() const noexcept { return pts_[0]; }
  double back() const noexcept { return pts_[size_ - 1]; }

  friend bool operator==(const FinitePt& a, const FinitePt& b) noexcept {
    return a.size_ == b.size_ &&
           std::equal(a.pts_.begin(), a.pts_.begin() + a.size_, b.pts_.begin());
  }

  /// Builds from values already sorted and distinct; no checks.
  static FinitePt from_sorted(const double* pts, int n, int k) noexcept {
    FinitePt p;
    std::copy(pts, pts + n, p.pts_.begin());
    p.size_ = static_cast<std::uint8_t>(n);
    p.k_ = static_cast<std::uint8_t>(k);
    return p;
  }

 private:
  std::array<double, kMaxK> pts_{};
  std::uint8_t size_ = 0;
  std::uint8_t k_ = 1;
};

using HyperPoint = std::variant<IntervalPt, ArcPt, FullCircle, FinitePt>;

/// Which hyperspace a point lives in.
enum class HyperKind { Continuum, Symmetric };

HyperKind kind_of(const HyperPoint& p) noexcept;

/// Counterclockwise length of an arc, in [0,1).
inline double arc_length(const ArcPt& a) noexcept { return wrap01(a.to - a.from); }

inline bool arc_contains(const ArcPt& a, double p) noexcept {
  return wrap01(p - a.from) <= arc_length(a);
}

/// Circle subcontinuum in the flat form used by the kernels.
struct Subarc {
  double from;
  double to;
  bool full;
  friend bool operator==(const Subarc&, const Subarc&) = default;
};

inline Subarc to_subarc(const HyperPoint& p);
inline HyperPoint to_hyperpoint(const Subarc& s) {
  if (s.full) return FullCircle{};
  return ArcPt{s.from, s.to};
}

// Exact Hausdorff distances for each representation.
double hausdorff(const IntervalPt& a, const IntervalPt& b) noexcept;
double hausdorff(const Subarc& a, const Subarc& b) noexcept;
double hausdorff(Space s, const FinitePt& a, const FinitePt& b) noexcept;

/// Hausdorff distance between two points of the same hyperspace over `s`.
/// Throws DomainError when the kinds do not match each other or the space.
double hausdorff(Space s, const HyperPoint& a, const HyperPoint& b);

/// Validates the variant invariants (ordering, ranges, cardinality).
bool well_formed(Space s, const HyperPoint& p) noexcept;

// "I:lo:hi", "A:from:to", "S1", "F:x1,x2,...". Parsing a finite set gives
// k = size; callers that track a larger k re-tag it.
std::string serialize(const HyperPoint& p);
HyperPoint parse_hyperpoint(std::string_view text);

Subarc to_subarc(const HyperPoint& p) {
  if (std::holds_alternative<FullCircle>(p)) return {0.0, 0.0, true};
  const auto& a = std::get<ArcPt>(p);
  return {a.from, a.to, false};
}

}  // namespace polyent
