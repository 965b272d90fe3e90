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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>

#include "polyent/error.hpp"
#include "polyent/induced.hpp"
#include "polyent/sampling.hpp"

using namespace polyent;

namespace {

Homeo1D half_map() { return Homeo1D::interval({{0, 0}, {0.5, 0.25}, {1, 1}}); }
Homeo1D circle_map() { return Homeo1D::circle({{0, 0}, {0.5, 0.7}, {1, 1}}); }

// Hausdorff distance of two arcs from dense samples of both.
double sampled_arc_distance(const Subarc& a, const Subarc& b, double step) {
  auto samples = [&](const Subarc& s) {
    std::vector<double> out;
    const double len = s.full ? 1.0 : wrap01(s.to - s.from);
    for (double t = 0; t < len; t += step) out.push_back(wrap01(s.from + t));
    out.push_back(wrap01(s.from + len));
    return out;
  };
  const auto pa = samples(a), pb = samples(b);
  auto directed = [](const std::vector<double>& p, std::vector<double> q) {
    std::sort(q.begin(), q.end());
    double worst = 0;
    for (double x : p) {
      auto it = std::lower_bound(q.begin(), q.end(), x);
      const double up = it == q.end() ? q.front() + 1.0 : *it;
      const double down = it == q.begin() ? q.back() - 1.0 : *std::prev(it);
      worst = std::max(worst, std::min(up - x, x - down));
    }
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

}  // namespace

TEST(Hausdorff, Intervals) {
  EXPECT_DOUBLE_EQ(hausdorff(IntervalPt{0.2, 0.5}, IntervalPt{0.1, 0.9}), 0.4);
  EXPECT_DOUBLE_EQ(hausdorff(IntervalPt{0.3, 0.3}, IntervalPt{0.3, 0.3}), 0.0);
}

TEST(Hausdorff, FiniteSets) {
  EXPECT_DOUBLE_EQ(hausdorff(Space::Interval, FinitePt({0.1, 0.9}, 2), FinitePt({0.1}, 2)), 0.8);
  EXPECT_NEAR(hausdorff(Space::Circle, FinitePt({0.05}, 1), FinitePt({0.95}, 1)), 0.1, 1e-15);
}

TEST(Hausdorff, ArcsAgainstFullCircle) {
  const Subarc full{0, 0, true};
  EXPECT_DOUBLE_EQ(hausdorff(Subarc{0.0, 0.5, false}, full), 0.25);
  EXPECT_DOUBLE_EQ(hausdorff(Subarc{0.3, 0.3, false}, full), 0.5);
  EXPECT_DOUBLE_EQ(hausdorff(full, full), 0.0);
}

TEST(Hausdorff, MismatchedKindsThrow) {
  EXPECT_THROW(hausdorff(Space::Interval, HyperPoint{IntervalPt{0, 1}}, HyperPoint{FinitePt::singleton(0.5)}),
               DomainError);
}

TEST(Hausdorff, ArcsMatchSamplingOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const Subarc a{u(rng), u(rng), i % 37 == 0};
    const Subarc b{u(rng), u(rng), false};
    EXPECT_NEAR(hausdorff(a, b), sampled_arc_distance(a, b, 1e-4), 2e-4);
  }
}

TEST(Serialize, RoundTrip) {
  const std::vector<HyperPoint> pts{IntervalPt{0.25, 0.75}, ArcPt{0.9, 0.1}, FullCircle{},
                                    FinitePt({0.1, 0.2, 0.30000000000000004}, 3)};
  EXPECT_EQ(serialize(pts[0]), "I:0.25:0.75");
  EXPECT_EQ(serialize(pts[2]), "S1");
  for (const auto& p : pts) EXPECT_EQ(parse_hyperpoint(serialize(p)), p);
  EXPECT_THROW(parse_hyperpoint("Q:1"), ConfigError);
  EXPECT_THROW(parse_hyperpoint("I:0.5"), ConfigError);
}

TEST(WellFormed, Invariants) {
  EXPECT_TRUE(well_formed(Space::Interval, IntervalPt{0.2, 0.4}));
  EXPECT_FALSE(well_formed(Space::Interval, IntervalPt{0.4, 0.2}));
  EXPECT_FALSE(well_formed(Space::Interval, ArcPt{0.1, 0.2}));
  EXPECT_TRUE(well_formed(Space::Circle, ArcPt{0.9, 0.1}));
  EXPECT_FALSE(well_formed(Space::Circle, ArcPt{1.2, 0.1}));
}

TEST(FinitePt, SortsAndDeduplicates) {
  FinitePt s({0.5, 0.1, 0.5}, 3);
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.front(), 0.1);
  EXPECT_THROW(FinitePt({0.1, 0.2, 0.3}, 2), DomainError);
}

TEST(Induced, ContinuumAndSymmetricImages) {
  EXPECT_EQ(induce_continuum(half_map(), IntervalPt{0.5, 1.0}), (IntervalPt{0.25, 1.0}));
  const auto arc = induce_continuum(circle_map(), Subarc{0.25, 0.5, false});
  EXPECT_NEAR(arc.from, 0.35, 1e-15);
  EXPECT_NEAR(arc.to, 0.7, 1e-15);
  EXPECT_TRUE(induce_continuum(circle_map(), Subarc{0, 0, true}).full);
  const auto s = induce_symmetric(half_map(), FinitePt({0.5, 0.75}, 2));
  EXPECT_EQ(s, FinitePt({0.25, 0.625}, 2));
}

TEST(Induced, FixedHyperpointCounts) {
  // C(I) with |Fix| = n: n(n+1)/2 intervals [a,b].
  EXPECT_EQ(fixed_hyperpoints(half_map(), HyperKind::Continuum).size(), 3u);
  auto three = Homeo1D::interval({{0, 0}, {0.15, 0.1}, {0.3, 0.3}, {0.65, 0.5}, {1, 1}});
  EXPECT_EQ(fixed_hyperpoints(three, HyperKind::Continuum).size(), 6u);
  // X^{*k}: nonempty subsets of size <= k.
  EXPECT_EQ(fixed_hyperpoints(three, HyperKind::Symmetric, 2).size(), 6u);
  EXPECT_EQ(fixed_hyperpoints(three, HyperKind::Symmetric, 3).size(), 7u);
  // circle, one fixed point: {a} and the whole circle
  EXPECT_EQ(fixed_hyperpoints(circle_map(), HyperKind::Continuum).size(), 2u);
  for (const auto& p : fixed_hyperpoints(three, HyperKind::Continuum))
    EXPECT_EQ(induce_continuum(three, p), p);
}

TEST(Sampling, GradedAxisContainsGridAndOffsets) {
  auto ax = graded_axis(0.0, 1.0, 0.25);
  EXPECT_EQ(ax, (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  auto g = graded_axis(0.0, 1.0, 0.25, Grading{{1.0}, 2, 1e-3});
  EXPECT_GT(g.size(), ax.size());
  for (double x : g) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
  }
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}

TEST(Sampling, CircleARegionMatchesPredicateEnumeration) {
  const auto cloud = sample_region({RegionKind::CircleA, Space::Circle, 1, 0.0}, 0.25);
  // oracle: every arc with grid endpoints, plus the circle, filtered by the predicate
  std::size_t expected = in_circle_a(FullCircle{}, 0.0) ? 1 : 0;
  for (double x : {0.0, 0.25, 0.5, 0.75})
    for (double y : {0.0, 0.25, 0.5, 0.75}) expected += in_circle_a(ArcPt{x, y}, 0.0) ? 1 : 0;
  EXPECT_EQ(cloud.points.size(), expected);
  EXPECT_EQ(cloud.points.size(), 14u);
  for (const auto& p : cloud.points) EXPECT_TRUE(in_circle_a(p, 0.0));
  const auto b = sample_region({RegionKind::CircleB, Space::Circle, 1, 0.0}, 0.25);
  for (const auto& p : b.points) EXPECT_TRUE(in_circle_b(p, 0.0));
}

TEST(Sampling, TriangleAndSimplexSizes) {
  EXPECT_EQ(sample_region({RegionKind::Triangle}, 0.25).points.size(), 15u);
  RegionSpec a2{RegionKind::AkSimplex, Space::Interval, 2};
  EXPECT_EQ(sample_region(a2, 0.25).points.size(), 15u);  // 5 singletons + C(5,2)
  RegionSpec s2{RegionKind::AkStrict, Space::Interval, 2};
  EXPECT_EQ(sample_region(s2, 0.25).points.size(), 10u);
  EXPECT_THROW(sample_region({RegionKind::Triangle}, 0.0), DomainError);
  EXPECT_THROW(sample_region({RegionKind::CircleA}, 0.25), DomainError);
}

TEST(Sampling, CloudCsvRoundTrip) {
  const auto cloud = sample_region({RegionKind::CircleB, Space::Circle, 1, 0.5}, 0.125);
  const auto file = std::filesystem::temp_directory_path() / "polyent_cloud_test.csv";
  write_cloud_csv(cloud, file);
  const auto back = read_cloud_csv(file);
  EXPECT_EQ(back.tag, cloud.tag);
  EXPECT_EQ(back.space, cloud.space);
  EXPECT_EQ(back.resolution, cloud.resolution);
  EXPECT_EQ(back.points, cloud.points);
  std::filesystem::remove(file);
}

TEST(Property, NonFixedHyperpointsMove) {
  auto f = half_map();
  for (const auto& p : sample_region({RegionKind::Triangle}, 0.05).points) {
    const auto& iv = std::get<IntervalPt>(p);
    const bool fixed = (iv.lo == 0 || iv.lo == 1) && (iv.hi == 0 || iv.hi == 1);
    EXPECT_EQ(induce_continuum(f, iv) == iv, fixed);
  }
}
