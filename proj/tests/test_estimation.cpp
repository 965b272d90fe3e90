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

#include <gtest/gtest.h>

#include <cmath>

#include "polyent/estimate.hpp"
#include "polyent/sampling.hpp"

using namespace polyent;

namespace {

Homeo1D half_map() { return Homeo1D::interval({{0, 0}, {0.5, 0.25}, {1, 1}}); }

std::vector<double> axis_cloud(double step, int per_decade = 0) {
  std::vector<double> out;
  for (const auto& p : sample_region({RegionKind::Axis}, step, Grading{{0.0, 1.0}, per_decade}).points)
    out.push_back(std::get<FinitePt>(p).front());
  return out;
}

// For an increasing interval map, x < y < z implies d_n(x,y) <= d_n(x,z), so
// a left-to-right sweep that keeps each point at distance >= eps from the
// last kept one is a maximum (n, eps)-separated subset of the cloud.
std::size_t exact_separated_1d(const PointSystem& sys, std::vector<double> cloud, int n, double eps) {
  std::sort(cloud.begin(), cloud.end());
  std::size_t count = 1;
  double last = cloud.front();
  for (double x : cloud)
    if (dyn_metric(sys, last, x, n) >= eps) {
      ++count;
      last = x;
    }
  return count;
}

}  // namespace

TEST(DynMetric, HalfMapExample) {
  PointSystem sys(half_map());
  EXPECT_DOUBLE_EQ(dyn_metric(sys, 0.5, 1.0, 5), 0.96875);
  EXPECT_DOUBLE_EQ(dyn_metric(sys, 0.5, 1.0, 1), 0.5);
  EXPECT_THROW(dyn_metric(sys, 0.5, 1.0, 0), DomainError);
}

TEST(SeededOrder, IsDeterministicPermutation) {
  auto a = seeded_order(1000, 42), b = seeded_order(1000, 42), c = seeded_order(1000, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], i);
}

TEST(Separated, SandwichedByExactCounts) {
  PointSystem sys(half_map());
  const auto cloud = axis_cloud(1e-3, 20);
  const int ns[] = {1, 4, 8, 16, 32};
  for (double eps : {0.1, 0.05}) {
    const auto got = separated_counts(sys, std::span<const double>(cloud), std::span<const int>(ns), eps);
    for (std::size_t i = 0; i < got.size(); ++i) {
      const auto hi = exact_separated_1d(sys, cloud, ns[i], eps);
      const auto lo = exact_separated_1d(sys, cloud, ns[i], 2 * eps);
      EXPECT_LE(got[i].count, hi) << "n=" << ns[i] << " eps=" << eps;
      EXPECT_GE(got[i].count, lo) << "n=" << ns[i] << " eps=" << eps;
    }
  }
}

TEST(Separated, FrozenOracleCounts) {
  // step 1e-3, no grading; values cross-checked with an independent script
  // (0.3 - 0.2 < 0.1 in doubles, hence 10 rather than 11 at n = 1)
  PointSystem sys(half_map());
  const auto cloud = axis_cloud(1e-3);
  EXPECT_EQ(exact_separated_1d(sys, cloud, 1, 0.1), 10u);
  EXPECT_EQ(exact_separated_1d(sys, cloud, 8, 0.1), 27u);
  EXPECT_EQ(exact_separated_1d(sys, cloud, 16, 0.1), 35u);
}

TEST(Separated, FastKernelMatchesReference) {
  PointSystem sys(half_map());
  const auto cloud = axis_cloud(2e-3, 10);
  const int ns[] = {4, 8, 16, 32};
  const auto ref = separated_counts_reference(sys, std::span<const double>(cloud), std::span<const int>(ns), 0.05, 9);
  for (bool parallel : {false, true})
    for (bool index : {false, true}) {
      PackOptions opt;
      opt.seed = 9;
      opt.parallel = parallel;
      opt.use_index = index;
      opt.block = 64;
      const auto got =
          separated_counts(sys, std::span<const double>(cloud), std::span<const int>(ns), 0.05, opt, true);
      for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_EQ(got[i].count, ref[i].count);
        EXPECT_EQ(got[i].witness, ref[i].witness);
      }
    }
}

TEST(Separated, ContinuumKernelMatchesReference) {
  IntervalContinuumSystem sys(half_map());
  const auto states = states_of(sys, sample_region({RegionKind::Triangle}, 0.02, Grading{{0.0, 1.0}, 5}).points);
  const int ns[] = {4, 8, 16};
  const auto ref =
      separated_counts_reference(sys, std::span<const IntervalPt>(states), std::span<const int>(ns), 0.1, 3);
  PackOptions opt;
  opt.seed = 3;
  const auto got = separated_counts(sys, std::span<const IntervalPt>(states), std::span<const int>(ns), 0.1, opt, true);
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(got[i].witness, ref[i].witness);
}

TEST(Separated, CircleArcKernelMatchesReference) {
  CircleContinuumSystem sys(Homeo1D::circle({{0, 0}, {0.5, 0.7}, {1, 1}}));
  const auto states =
      states_of(sys, sample_region({RegionKind::CircleB, Space::Circle, 1, 0.0}, 0.05).points);
  const int ns[] = {2, 4, 8};
  const auto ref = separated_counts_reference(sys, std::span<const Subarc>(states), std::span<const int>(ns), 0.1, 5);
  PackOptions opt;
  opt.seed = 5;
  const auto got = separated_counts(sys, std::span<const Subarc>(states), std::span<const int>(ns), 0.1, opt, true);
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(got[i].witness, ref[i].witness);
}

TEST(Separated, CountsGrowWithN) {
  PointSystem sys(half_map());
  const auto cloud = axis_cloud(1e-3, 20);
  const int ns[] = {1, 2, 4, 8, 16, 32, 64};
  const auto got = separated_counts(sys, std::span<const double>(cloud), std::span<const int>(ns), 0.05);
  for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(got[i].count, got[i - 1].count);
}

TEST(Separated, RejectsBadInput) {
  PointSystem sys(half_map());
  const std::vector<double> empty;
  EXPECT_THROW(separated_count(sys, std::span<const double>(empty), 4, 0.1), DomainError);
  const std::vector<double> one{0.5};
  EXPECT_THROW(separated_count(sys, std::span<const double>(one), 4, 0.0), DomainError);
  const int unsorted[] = {8, 4};
  EXPECT_THROW(separated_counts(sys, std::span<const double>(one), std::span<const int>(unsorted), 0.1), DomainError);
}

TEST(Fit, RecoversShiftedPowerLaw) {
  std::vector<GrowthPoint> pts;
  for (int n : {8, 11, 16, 23, 32, 45, 64}) pts.push_back({n, std::pow(3.0 + 2.0 * n, 2.0)});
  const auto g = fit_growth(pts);
  EXPECT_NEAR(g.slope, 2.0, 1e-4);
  EXPECT_NEAR(g.n0, 1.5, 1e-2);
  EXPECT_LT(g.plain_slope, g.slope);
  EXPECT_FALSE(g.saturated);
}

TEST(Fit, SaturationAndFlatCounts) {
  std::vector<GrowthPoint> sat{{8, 10}, {16, 20}, {32, 40}, {64, 80}, {128, 80}, {256, 80}, {512, 80}};
  EXPECT_EQ(usable_prefix(sat), 3u);
  const auto g = fit_growth(sat);
  EXPECT_TRUE(g.saturated);
  EXPECT_NEAR(g.slope, 1.0, 1e-6);
  std::vector<GrowthPoint> flat{{8, 5}, {16, 5}, {32, 5}, {64, 5}};
  const auto f = fit_growth(flat);
  EXPECT_TRUE(f.flat);
  EXPECT_EQ(f.slope, 0.0);
  std::vector<GrowthPoint> few{{8, 10}, {16, 20}, {32, 20}, {64, 20}, {128, 20}};
  EXPECT_THROW(fit_growth(few), EstimationError);
}

TEST(Estimate, IdentityHasZeroSlope) {
  PointSystem sys(Homeo1D::identity(Space::Interval));
  const auto cloud = axis_cloud(1e-3);
  EstimateOptions opt;
  opt.n_list = {8, 16, 32, 64};
  const auto e = estimate_hpol(sys, std::span<const double>(cloud), opt);
  EXPECT_EQ(e.value, 0.0);
}

TEST(Estimate, HalfMapSlopeNearOne) {
  PointSystem sys(half_map());
  const auto cloud = axis_cloud(1e-3, 60);
  EstimateOptions opt;
  opt.eps_list = {0.1, 0.05};
  opt.n_list = geometric_n_list(8, 362, std::sqrt(2.0));
  const auto e = estimate_hpol(sys, std::span<const double>(cloud), opt, 1e-3);
  EXPECT_NEAR(e.value, 1.0, 0.15);
  EXPECT_EQ(e.per_eps.size(), 2u);
}

TEST(Estimate, WarnsWhenResolutionIsCoarse) {
  PointSystem sys(half_map());
  const auto cloud = axis_cloud(0.05, 30);
  EstimateOptions opt;
  opt.eps_list = {0.1};
  opt.n_list = {4, 8, 16, 32};
  const auto e = estimate_hpol(sys, std::span<const double>(cloud), opt, 0.05);
  ASSERT_FALSE(e.warnings.empty());
  EXPECT_NE(e.warnings.front().find("eps/4"), std::string::npos);
}

TEST(Estimate, GeometricNList) {
  EXPECT_EQ(geometric_n_list(8, 64), (std::vector<int>{8, 16, 32, 64}));
  EXPECT_EQ(geometric_n_list(8, 91, std::sqrt(2.0)), (std::vector<int>{8, 11, 16, 23, 32, 45, 64, 91}));
}
