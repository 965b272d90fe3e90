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

#include "polyent/homeo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyent/error.hpp"

namespace polyent {
namespace {

constexpr double kKnotMerge = 1e-15;

double interpolate(std::span<const Breakpoint> bps, double x) noexcept {
  if (x <= bps.front().x) return bps.front().y;
  if (x >= bps.back().x) return bps.back().y;
  auto it = std::upper_bound(bps.begin(), bps.end(), x,
                             [](double v, const Breakpoint& b) { return v < b.x; });
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  if (x == lo.x) return lo.y;
  return lo.y + (x - lo.x) * ((hi.y - lo.y) / (hi.x - lo.x));
}

// Turns knots of a periodic lift (spanning one period in u, values
// advancing by `degree` per period) into breakpoints over [0,1].
std::vector<Breakpoint> normalize_periodic(std::vector<Breakpoint> knots, int degree) {
  std::sort(knots.begin(), knots.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
  const double u0 = knots.front().x;
  auto periodic = [&](double u) {
    double k = std::floor(u - u0);
    double r = u - k;
    if (r >= u0 + 1.0) {
      r -= 1.0;
      k += 1.0;
    }
    return interpolate(knots, r) + degree * k;
  };
  std::vector<double> us{0.0, 1.0};
  for (const auto& kn : knots) us.push_back(wrap01(kn.x));
  std::sort(us.begin(), us.end());
  std::vector<double> uniq;
  for (double u : us)
    if (uniq.empty() || u - uniq.back() > kKnotMerge) uniq.push_back(u);
  if (1.0 - uniq.back() <= kKnotMerge) uniq.back() = 1.0;

  std::vector<Breakpoint> out;
  out.reserve(uniq.size());
  for (double u : uniq) out.push_back({u, periodic(u)});
  out.back().y = out.front().y + degree;
  double shift = std::floor(out.front().y);
  if (shift != 0.0)
    for (auto& b : out) b.y -= shift;
  return out;
}

}  // namespace

Homeo1D::Homeo1D(Space space, Orientation orientation, std::vector<Breakpoint> bps)
    : space_(space), orientation_(orientation), bps_(std::move(bps)) {}

double Homeo1D::segment_value(double x) const noexcept { return interpolate(bps_, x); }

double Homeo1D::lift(double x) const noexcept {
  if (space_ == Space::Interval) return segment_value(x);
  double k = std::floor(x);
  double r = x - k;
  if (r >= 1.0) {
    r = 0.0;
    k += 1.0;
  }
  return segment_value(r) + degree() * k;
}

std::vector<Violation> validate(const Homeo1D& f) {
  std::vector<Violation> out;
  auto bps = f.breakpoints();
  if (bps.size() < 2) {
    out.push_back({-1, "fewer than two breakpoints"});
    return out;
  }
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (!std::isfinite(bps[i].x) || !std::isfinite(bps[i].y)) {
      out.push_back({static_cast<int>(i), "non-finite coordinate"});
      return out;
    }
  }
  const int m = static_cast<int>(bps.size()) - 1;
  if (bps.front().x != 0.0) out.push_back({0, "first breakpoint must have x = 0"});
  if (bps.back().x != 1.0) out.push_back({m, "last breakpoint must have x = 1"});
  const bool preserving = f.orientation() == Orientation::Preserving;
  for (int i = 0; i < m; ++i) {
    if (!(bps[i + 1].x > bps[i].x))
      out.push_back({i + 1, "x not strictly increasing"});
    bool ok = preserving ? bps[i + 1].y > bps[i].y : bps[i + 1].y < bps[i].y;
    if (!ok)
      out.push_back({i + 1, preserving ? "not monotone increasing" : "not monotone decreasing"});
  }
  if (f.space() == Space::Interval) {
    double y0 = preserving ? 0.0 : 1.0;
    if (bps.front().y != y0)
      out.push_back({0, "interval map must send 0 to " + std::string(preserving ? "0" : "1")});
    if (bps.back().y != 1.0 - y0)
      out.push_back({m, "interval map must send 1 to " + std::string(preserving ? "1" : "0")});
  } else {
    if (std::fabs(bps.back().y - bps.front().y - f.degree()) > 1e-12)
      out.push_back({m, "circle lift must advance by exactly one turn"});
  }
  if (!out.empty()) return out;

  for (int i = 0; i < m; ++i) {
    double dx = bps[i + 1].x - bps[i].x;
    double dy = bps[i + 1].y - bps[i].y;
    if (dx != dy) continue;
    double offset = bps[i].y - bps[i].x;
    bool on_diagonal = f.space() == Space::Interval
                           ? offset == 0.0
                           : std::fabs(offset - std::round(offset)) <= 1e-12;
    if (on_diagonal) out.push_back({i, "non-finite fixed set: segment lies on the diagonal"});
  }
  return out;
}

void require_valid(const Homeo1D& f) {
  auto v = validate(f);
  if (v.empty()) return;
  std::string msg = "invalid map:";
  for (const auto& e : v) msg += " [" + std::to_string(e.index) + "] " + e.message + ";";
  throw DomainError(msg);
}

double eval(const Homeo1D& f, double x) {
  if (f.space() == Space::Interval && !(x >= 0.0 && x <= 1.0))
    throw DomainError("x = " + std::to_string(x) + " is outside [0,1]");
  return f(x);
}

Homeo1D invert(const Homeo1D& f) {
  std::vector<Breakpoint> swapped;
  swapped.reserve(f.breakpoints().size());
  for (const auto& b : f.breakpoints()) swapped.push_back({b.y, b.x});
  if (f.space() == Space::Interval) {
    std::sort(swapped.begin(), swapped.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
    return Homeo1D(Space::Interval, f.orientation(), std::move(swapped));
  }
  return Homeo1D(Space::Circle, f.orientation(),
                 normalize_periodic(std::move(swapped), f.degree()));
}

Homeo1D compose(const Homeo1D& g, const Homeo1D& f) {
  if (g.space() != f.space()) throw DomainError("compose: maps act on different spaces");
  const Orientation o = g.degree() * f.degree() == 1 ? Orientation::Preserving
                                                     : Orientation::Reversing;
  const Homeo1D finv = invert(f);
  std::vector<double> xs;
  for (const auto& b : f.breakpoints()) xs.push_back(b.x);
  double lo = std::min(f.lift(0.0), f.lift(1.0));
  double hi = std::max(f.lift(0.0), f.lift(1.0));
  for (const auto& b : g.breakpoints()) {
    if (f.space() == Space::Interval) {
      xs.push_back(finv(b.x));
      continue;
    }
    for (double k = std::floor(lo) - 1; k <= std::ceil(hi) + 1; k += 1.0) {
      double v = b.x + k;
      if (v < lo || v > hi) continue;
      double x = finv.lift(v);
      // The inverse lift is normalized by whole turns; pull x back into [0,1].
      x -= std::floor(x);
      xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> uniq;
  for (double x : xs)
    if (uniq.empty() || x - uniq.back() > kKnotMerge) uniq.push_back(x);
  uniq.front() = 0.0;
  if (1.0 - uniq.back() <= kKnotMerge) uniq.back() = 1.0;
  else uniq.push_back(1.0);

  std::vector<Breakpoint> out;
  out.reserve(uniq.size());
  for (double x : uniq) out.push_back({x, g.lift(f.lift(x))});
  if (f.space() == Space::Circle) {
    out.back().y = out.front().y + (o == Orientation::Preserving ? 1 : -1);
    double shift = std::floor(out.front().y);
    if (shift != 0.0)
      for (auto& b : out) b.y -= shift;
  }
  return Homeo1D(f.space(), o, std::move(out));
}

Homeo1D power(const Homeo1D& f, int m) {
  if (m < 1) throw DomainError("power: exponent must be >= 1");
  Homeo1D out = f;
  for (int i = 1; i < m; ++i) out = compose(f, out);
  return out;
}

double iterate(const Homeo1D& f, double x, std::int64_t n) {
  if (n == 0) return x;
  if (n < 0) {
    Homeo1D g = invert(f);
    for (std::int64_t i = 0; i < -n; ++i) x = g(x);
    return x;
  }
  for (std::int64_t i = 0; i < n; ++i) x = f(x);
  return x;
}

std::vector<double> fixed_points(const Homeo1D& f) {
  auto bps = f.breakpoints();
  std::vector<double> roots;
  const bool circle = f.space() == Space::Circle;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    double g0 = bps[i].y - bps[i].x;
    double g1 = bps[i + 1].y - bps[i + 1].x;
    double klo = circle ? std::ceil(std::min(g0, g1)) : 0.0;
    double khi = circle ? std::floor(std::max(g0, g1)) : 0.0;
    if (!circle && (std::min(g0, g1) > 0.0 || std::max(g0, g1) < 0.0)) continue;
    for (double k = klo; k <= khi; k += 1.0) {
      if (k == g0) {
        roots.push_back(bps[i].x);
      } else if (k == g1) {
        roots.push_back(bps[i + 1].x);
      } else if (g0 != g1) {
        double t = (k - g0) / (g1 - g0);
        roots.push_back(bps[i].x + t * (bps[i + 1].x - bps[i].x));
      }
    }
  }
  if (circle)
    for (double& r : roots) r = wrap01(r);
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-14) out.push_back(r);
  if (circle && out.size() > 1 && 1.0 - out.back() <= 1e-14) out.pop_back();
  return out;
}

Homeo1D restrict_to(const Homeo1D& f, double a, double b) {
  if (f.orientation() != Orientation::Preserving) throw DomainError("restrict_to: map must preserve orientation");
  if (!(a < b) || b - a > 1.0 || (f.space() == Space::Interval && (a < 0.0 || b > 1.0)))
    throw DomainError("restrict_to: need a < b inside the domain");
  const double shift = f.space() == Space::Circle ? std::round(f.lift(a) - a) : 0.0;
  auto g = [&](double x) { return f.lift(x) - shift; };
  if (std::abs(g(a) - a) > 1e-12 || std::abs(g(b) - b) > 1e-12)
    throw DomainError("restrict_to: endpoints must be fixed");
  std::vector<double> knots{a, b};
  for (const auto& bp : f.breakpoints())
    for (double k = std::floor(a) - 1.0; k <= std::ceil(b) + 1.0; k += 1.0)
      if (bp.x + k > a && bp.x + k < b) knots.push_back(bp.x + k);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  const double w = b - a;
  std::vector<Breakpoint> out;
  for (double x : knots) out.push_back({(x - a) / w, std::clamp((g(x) - a) / w, 0.0, 1.0)});
  out.front() = {0.0, 0.0};
  out.back() = {1.0, 1.0};
  return Homeo1D::interval(std::move(out));
}

OrbitLimit orbit_limits(const Homeo1D& f_in, double x, double tol, std::int64_t horizon) {
  const Homeo1D f = f_in.orientation() == Orientation::Reversing ? power(f_in, 2) : f_in;
  const auto fix = fixed_points(f);
  if (fix.empty()) throw ConvergenceError("orbit_limits: map has no fixed points");
  const Homeo1D g = invert(f);
  auto settle = [&](const Homeo1D& h) {
    double y = x;
    for (std::int64_t i = 0; i < horizon; ++i) {
      double next = h(y);
      if (next == y) break;
      y = next;
    }
    double best = fix.front();
    double dbest = std::numeric_limits<double>::infinity();
    for (double p : fix) {
      double d = distance(f.space(), y, p);
      if (d < dbest) {
        dbest = d;
        best = p;
      }
    }
    if (!(dbest < tol))
      throw ConvergenceError("orbit of " + std::to_string(x) + " is " + std::to_string(dbest) +
                             " from the nearest fixed point after " +
                             std::to_string(horizon) + " steps");
    return best;
  };
  return {settle(f), settle(g)};
}

}  // namespace polyent
