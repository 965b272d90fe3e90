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

#include "polyent/estimate.hpp"

#include <algorithm>
#include <cmath>

namespace polyent {

std::vector<int> geometric_n_list(int n_min, int n_max, double ratio) {
  if (n_min < 1 || n_max < n_min || !(ratio > 1.0)) throw DomainError("geometric_n_list: bad range");
  std::vector<int> out;
  for (double n = n_min; n <= n_max + 0.5; n *= ratio) {
    const int v = static_cast<int>(std::lround(n));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

EpsFit fit_counts(double eps, std::vector<SeparatedCount> counts) {
  EpsFit f;
  f.eps = eps;
  std::vector<GrowthPoint> pts;
  for (const auto& c : counts) pts.push_back({c.n, static_cast<double>(c.count)});
  f.counts = std::move(counts);
  try {
    f.fit = fit_growth(pts);
    f.ok = true;
  } catch (const EstimationError& e) {
    f.error = e.what();
  }
  return f;
}

void finalize_estimate(EntropyEstimate& est, double r2_threshold) {
  const EpsFit* best = nullptr;
  const EpsFit* fallback = nullptr;
  for (const auto& f : est.per_eps) {
    if (!f.ok) continue;
    if (!fallback || f.eps < fallback->eps) fallback = &f;
    if (f.fit.r2 >= r2_threshold && (!best || f.eps < best->eps)) best = &f;
    if (f.fit.saturated)
      est.warnings.push_back(f.eps > 0 ? "count saturated at eps " + std::to_string(f.eps) + " after n = " +
                                             std::to_string(f.counts[f.fit.used - 1].n)
                                       : "word count saturated after n = " + std::to_string(f.counts[f.fit.used - 1].n));
  }
  if (!fallback) throw EstimationError("estimate_hpol: no eps produced 3 usable (n, count) pairs");
  if (!best) {
    est.warnings.push_back("no fit reached r2 threshold; using smallest usable eps");
    best = fallback;
  }
  est.value = best->fit.slope;
  est.final_eps = best->eps;
}

}  // namespace polyent
