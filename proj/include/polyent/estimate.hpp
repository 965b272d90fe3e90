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

#include <string>
#include <vector>

#include "polyent/fit.hpp"
#include "polyent/separated.hpp"

namespace polyent {

struct EstimateOptions {
  std::vector<double> eps_list{0.1, 0.05, 0.025};
  std::vector<int> n_list{8, 16, 32, 64, 128};
  double r2_threshold = 0.98;
  PackOptions pack;
};

struct EpsFit {
  double eps = 0.0;
  std::vector<SeparatedCount> counts;
  GrowthFit fit;
  bool ok = false;
  std::string error;
};

struct EntropyEstimate {
  std::vector<EpsFit> per_eps;
  /// Slope at the smallest eps whose fit passes the r² threshold.
  double value = 0.0;
  double final_eps = 0.0;
  int n_min = 0;
  int n_max = 0;
  std::vector<std::string> warnings;
};

/// Powers-of-`ratio` window lengths from n_min up to n_max inclusive.
std::vector<int> geometric_n_list(int n_min, int n_max, double ratio = 2.0);

/// Picks the reported value among per-eps fits. Throws EstimationError when
/// no eps produced a usable fit.
void finalize_estimate(EntropyEstimate& est, double r2_threshold);

/// Fit of a count table, saturation handled as in fit_growth.
EpsFit fit_counts(double eps, std::vector<SeparatedCount> counts);

template <DynamicalSystem S>
EntropyEstimate estimate_hpol(const S& sys, std::span<const typename S::State> cloud,
                              const EstimateOptions& opt, double resolution = 0.0) {
  if (opt.eps_list.empty() || opt.n_list.size() < 3)
    throw EstimationError("estimate_hpol: need eps values and at least 3 window lengths");
  EntropyEstimate est;
  est.n_min = opt.n_list.front();
  est.n_max = opt.n_list.back();
  for (double eps : opt.eps_list) {
    if (resolution > eps / 4.0)
      est.warnings.push_back("cloud resolution " + std::to_string(resolution) + " exceeds eps/4 for eps " +
                             std::to_string(eps));
    est.per_eps.push_back(fit_counts(eps, separated_counts(sys, cloud, opt.n_list, eps, opt.pack)));
  }
  finalize_estimate(est, opt.r2_threshold);
  return est;
}

}  // namespace polyent
