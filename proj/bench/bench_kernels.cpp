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

#include <benchmark/benchmark.h>

#include <omp.h>

#include "polyent/coding.hpp"
#include "polyent/sampling.hpp"
#include "polyent/separated.hpp"

using namespace polyent;

namespace {

const Homeo1D& half_map() {
  static const Homeo1D f = Homeo1D::interval({{0, 0}, {0.5, 0.25}, {1, 1}});
  return f;
}

const std::vector<IntervalPt>& triangle() {
  static const auto cloud = [] {
    IntervalContinuumSystem sys(half_map());
    return states_of(sys, sample_region({RegionKind::Triangle}, 2e-2, Grading{{0.0, 1.0}, 5}).points);
  }();
  return cloud;
}

constexpr int kN[] = {8, 16, 32};

// range(0): 0 serial reference, 1 serial + index, 2 OpenMP brute force, 3 OpenMP + index
void BM_Packing(benchmark::State& state) {
  IntervalContinuumSystem sys(half_map());
  const std::span<const IntervalPt> cloud(triangle());
  const auto mode = state.range(0);
  PackOptions opt;
  opt.parallel = mode >= 2;
  opt.use_index = mode == 1 || mode == 3;
  std::size_t count = 0;
  for (auto _ : state) {
    const auto counts = mode == 0 ? separated_counts_reference(sys, cloud, std::span<const int>(kN), 0.1, opt.seed)
                                  : separated_counts(sys, cloud, std::span<const int>(kN), 0.1, opt);
    count = counts.back().count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["count"] = static_cast<double>(count);
  state.counters["threads"] = mode >= 2 ? omp_get_max_threads() : 1;
}
BENCHMARK(BM_Packing)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_WordCounts(benchmark::State& state) {
  IntervalContinuumSystem sys(half_map());
  Alphabet<IntervalContinuumSystem> alpha(
      sys, {Letter::ball(IntervalPt{0.5, 1.0}, 0.1), Letter::ball(IntervalPt{0.0, 0.5}, 0.1)});
  const std::span<const IntervalPt> cloud(triangle());
  const int ns[] = {16, 32, 64};
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    if (state.range(0) == 2) {
      benchmark::DoNotOptimize(word_count_reference(alpha, cloud, 64));
    } else {
      benchmark::DoNotOptimize(word_counts(alpha, cloud, std::span<const int>(ns), parallel).counts.back());
    }
  }
}
// 0 serial sparse words, 1 OpenMP sparse words, 2 serial dense reference
BENCHMARK(BM_WordCounts)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
