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

#include "polyent/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyent/error.hpp"

namespace polyent {

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw EstimationError("least_squares: need >= 2 paired points");
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    f.sse += r * r;
  }
  f.r2 = syy > 0 ? 1.0 - f.sse / syy : 1.0;
  return f;
}

std::size_t usable_prefix(std::span<const GrowthPoint> pts) {
  bool grown = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i].count > pts[i - 1].count) grown = true;
    if (grown && i + 2 < pts.size() && pts[i].count == pts[i + 1].count &&
        pts[i + 1].count == pts[i + 2].count)
      return i;
  }
  return pts.size();
}

namespace {

LinearFit shifted(std::span<const GrowthPoint> pts, double n0) {
  std::vector<double> x, y;
  for (const auto& p : pts) {
    x.push_back(std::log(p.n + n0));
    y.push_back(std::log(p.count));
  }
  return least_squares(x, y);
}

}  // namespace

GrowthFit fit_growth(std::span<const GrowthPoint> pts) {
  for (const auto& p : pts)
    if (p.n < 1 || !(p.count >= 1.0)) throw EstimationError("fit_growth: need n >= 1 and count >= 1");
  GrowthFit g;
  g.used = usable_prefix(pts);
  g.saturated = g.used < pts.size();
  if (g.used < 3) throw EstimationError("fit_growth: fewer than 3 usable (n, count) pairs");
  auto use = pts.first(g.used);

  g.flat = std::all_of(use.begin(), use.end(), [&](const GrowthPoint& p) { return p.count == use.front().count; });
  if (g.flat) {
    g.r2 = g.plain_r2 = 1.0;
    return g;
  }

  const LinearFit plain = shifted(use, 0.0);
  g.plain_slope = plain.slope;
  g.plain_r2 = plain.r2;
  g.slope = plain.slope;
  g.r2 = plain.r2;
  if (use.size() < 4) return g;

  const double hi = static_cast<double>(use.front().n);
  constexpr int kGrid = 64;
  double best_n0 = 0.0, best_sse = plain.sse;
  for (int i = 1; i <= kGrid; ++i) {
    const double n0 = hi * i / kGrid;
    const double s = shifted(use, n0).sse;
    if (s < best_sse) {
      best_sse = s;
      best_n0 = n0;
    }
  }
  double a = std::max(0.0, best_n0 - hi / kGrid), b = std::min(hi, best_n0 + hi / kGrid);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = shifted(use, c).sse, fd = shifted(use, d).sse;
  for (int it = 0; it < 60; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = shifted(use, c).sse;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = shifted(use, d).sse;
    }
  }
  const double mid = 0.5 * (a + b);
  if (shifted(use, mid).sse < best_sse) best_n0 = mid;

  const LinearFit f = shifted(use, best_n0);
  g.n0 = best_n0;
  g.slope = std::max(0.0, f.slope);
  g.r2 = f.r2;
  return g;
}

}  // namespace polyent
