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
#include <concepts>
#include <vector>

#include "polyent/error.hpp"
#include "polyent/homeo.hpp"
#include "polyent/hyperpoint.hpp"
#include "polyent/induced.hpp"

namespace polyent {

/// A map to iterate together with the metric of its phase space. `step`
/// and `distance` act on the same State type; `unstep` is the inverse map.
template <class S>
concept DynamicalSystem = requires(const S& s, const typename S::State& x) {
  { s.step(x) } -> std::same_as<typename S::State>;
  { s.unstep(x) } -> std::same_as<typename S::State>;
  { s.distance(x, x) } -> std::same_as<double>;
  { s.from_hyperpoint(HyperPoint{}) } -> std::same_as<typename S::State>;
  { s.to_hyperpoint(x) } -> std::same_as<HyperPoint>;
  { s.fixed_states() } -> std::same_as<std::vector<typename S::State>>;
};

namespace detail {
class MapPair {
 public:
  explicit MapPair(const Homeo1D& f) : f_(f), finv_(invert(f)) {}
  const Homeo1D& map() const noexcept { return f_; }
  const Homeo1D& inverse() const noexcept { return finv_; }
  Space space() const noexcept { return f_.space(); }

 protected:
  Homeo1D f_;
  Homeo1D finv_;
};
}  // namespace detail

/// f acting on X.
class PointSystem : public detail::MapPair {
 public:
  using State = double;
  using MapPair::MapPair;

  double step(double x) const noexcept { return f_(x); }
  double unstep(double x) const noexcept { return finv_(x); }
  double distance(double x, double y) const noexcept { return polyent::distance(space(), x, y); }
  static constexpr int kSketchDims = 1;
  std::array<double, 1> sketch(double x) const noexcept { return {x}; }
  bool sketch_periodic() const noexcept { return space() == Space::Circle; }

  double from_hyperpoint(const HyperPoint& p) const {
    if (const auto* s = std::get_if<FinitePt>(&p); s && s->size() == 1) return s->front();
    if (const auto* iv = std::get_if<IntervalPt>(&p); iv && iv->lo == iv->hi) return iv->lo;
    if (const auto* a = std::get_if<ArcPt>(&p); a && a->from == a->to) return a->from;
    throw DomainError("PointSystem: expected a singleton");
  }
  HyperPoint to_hyperpoint(double x) const { return FinitePt::singleton(x); }
  std::vector<double> fixed_states() const { return fixed_points(f_); }
};

/// C(f) on C(I), states are intervals.
class IntervalContinuumSystem : public detail::MapPair {
 public:
  using State = IntervalPt;
  explicit IntervalContinuumSystem(const Homeo1D& f) : MapPair(f) {
    if (f.space() != Space::Interval) throw DomainError("IntervalContinuumSystem needs an interval map");
  }

  State step(const State& a) const noexcept { return induce_continuum(f_, a); }
  State unstep(const State& a) const noexcept { return induce_continuum(finv_, a); }
  double distance(const State& a, const State& b) const noexcept { return hausdorff(a, b); }
  static constexpr int kSketchDims = 2;
  std::array<double, 2> sketch(const State& a) const noexcept { return {a.lo, a.hi}; }
  bool sketch_periodic() const noexcept { return false; }
  State from_hyperpoint(const HyperPoint& p) const {
    if (const auto* iv = std::get_if<IntervalPt>(&p)) return *iv;
    throw DomainError("IntervalContinuumSystem: expected an interval");
  }
  HyperPoint to_hyperpoint(const State& a) const { return a; }
  std::vector<State> fixed_states() const {
    std::vector<State> out;
    for (const auto& p : fixed_hyperpoints(f_, HyperKind::Continuum))
      out.push_back(std::get<IntervalPt>(p));
    return out;
  }
};

/// C(f) on C(S^1), states are arcs or the full circle.
class CircleContinuumSystem : public detail::MapPair {
 public:
  using State = Subarc;
  explicit CircleContinuumSystem(const Homeo1D& f) : MapPair(f) {
    if (f.space() != Space::Circle) throw DomainError("CircleContinuumSystem needs a circle map");
  }

  State step(const State& a) const noexcept { return induce_continuum(f_, a); }
  State unstep(const State& a) const noexcept { return induce_continuum(finv_, a); }
  double distance(const State& a, const State& b) const noexcept { return hausdorff(a, b); }
  // Half the arc length and the distances from 0 and 1/2 to the arc are all
  // 1-Lipschitz for the Hausdorff metric.
  static constexpr int kSketchDims = 3;
  std::array<double, 3> sketch(const State& a) const noexcept {
    if (a.full) return {0.5, 0.0, 0.0};
    const ArcPt arc{a.from, a.to};
    auto gap = [&](double p) {
      return arc_contains(arc, p) ? 0.0 : std::min(circle_distance(p, a.from), circle_distance(p, a.to));
    };
    return {0.5 * arc_length(arc), gap(0.0), gap(0.5)};
  }
  bool sketch_periodic() const noexcept { return false; }
  State from_hyperpoint(const HyperPoint& p) const {
    if (std::holds_alternative<ArcPt>(p) || std::holds_alternative<FullCircle>(p))
      return to_subarc(p);
    throw DomainError("CircleContinuumSystem: expected an arc");
  }
  HyperPoint to_hyperpoint(const State& a) const { return polyent::to_hyperpoint(a); }
  std::vector<State> fixed_states() const {
    std::vector<State> out;
    for (const auto& p : fixed_hyperpoints(f_, HyperKind::Continuum)) out.push_back(to_subarc(p));
    return out;
  }
};

/// f^{*k} on X^{*k}.
class SymmetricSystem : public detail::MapPair {
 public:
  using State = FinitePt;
  SymmetricSystem(const Homeo1D& f, int k) : MapPair(f), k_(k) {
    if (k < 1 || k > FinitePt::kMaxK) throw DomainError("SymmetricSystem: k out of range");
  }

  int k() const noexcept { return k_; }
  State step(const State& s) const noexcept { return induce_symmetric(f_, s); }
  State unstep(const State& s) const noexcept { return induce_symmetric(finv_, s); }
  double distance(const State& a, const State& b) const noexcept {
    return hausdorff(space(), a, b);
  }
  // min and max of a set on a line are 1-Lipschitz; on the circle there is
  // no such cheap bound and the sketch is empty.
  static constexpr int kSketchDims = 2;
  std::array<double, 2> sketch(const State& s) const noexcept { return {s.front(), s.back()}; }
  bool sketch_periodic() const noexcept { return false; }
  bool has_sketch() const noexcept { return space() == Space::Interval; }
  State from_hyperpoint(const HyperPoint& p) const {
    const auto* s = std::get_if<FinitePt>(&p);
    if (!s || s->size() > k_) throw DomainError("SymmetricSystem: expected at most k points");
    return FinitePt::from_sorted(s->points().data(), s->size(), k_);
  }
  HyperPoint to_hyperpoint(const State& s) const { return s; }
  std::vector<State> fixed_states() const {
    std::vector<State> out;
    for (const auto& p : fixed_hyperpoints(f_, HyperKind::Symmetric, k_))
      out.push_back(std::get<FinitePt>(p));
    return out;
  }

 private:
  int k_;
};

/// f x g on X x X with the max metric.
class ProductSystem {
 public:
  using State = std::array<double, 2>;
  ProductSystem(const Homeo1D& f, const Homeo1D& g) : first_(f), second_(g) {}

  State step(const State& s) const noexcept { return {first_.step(s[0]), second_.step(s[1])}; }
  State unstep(const State& s) const noexcept {
    return {first_.unstep(s[0]), second_.unstep(s[1])};
  }
  double distance(const State& a, const State& b) const noexcept {
    return std::max(first_.distance(a[0], b[0]), second_.distance(a[1], b[1]));
  }
  static constexpr int kSketchDims = 2;
  std::array<double, 2> sketch(const State& s) const noexcept { return s; }
  bool sketch_periodic() const noexcept { return first_.space() == Space::Circle; }
  State from_hyperpoint(const HyperPoint& p) const {
    if (const auto* iv = std::get_if<IntervalPt>(&p)) return {iv->lo, iv->hi};
    throw DomainError("ProductSystem: expected a coordinate pair");
  }
  HyperPoint to_hyperpoint(const State& s) const { return IntervalPt{s[0], s[1]}; }
  std::vector<State> fixed_states() const {
    std::vector<State> out;
    for (double a : first_.fixed_states())
      for (double b : second_.fixed_states()) out.push_back({a, b});
    return out;
  }

 private:
  PointSystem first_;
  PointSystem second_;
};

/// Converts a cloud of hyperpoints into system states.
template <DynamicalSystem S>
std::vector<typename S::State> states_of(const S& sys, const std::vector<HyperPoint>& pts) {
  std::vector<typename S::State> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(sys.from_hyperpoint(p));
  return out;
}

/// n-fold iterate of a state (negative n uses the inverse).
template <DynamicalSystem S>
typename S::State iterate_state(const S& sys, typename S::State x, long n) {
  for (; n > 0; --n) x = sys.step(x);
  for (; n < 0; ++n) x = sys.unstep(x);
  return x;
}

/// d_n(x, y) = max over 0 <= t < n of d(f^t x, f^t y).
template <DynamicalSystem S>
double dyn_metric(const S& sys, typename S::State x, typename S::State y, int n) {
  if (n < 1) throw DomainError("dyn_metric: n must be >= 1");
  double d = 0.0;
  for (int t = 0; t < n; ++t) {
    d = std::max(d, sys.distance(x, y));
    if (t + 1 < n) {
      x = sys.step(x);
      y = sys.step(y);
    }
  }
  return d;
}

}  // namespace polyent
