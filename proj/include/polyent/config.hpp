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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyent/coding.hpp"
#include "polyent/map_io.hpp"
#include "polyent/sampling.hpp"

namespace polyent {

enum class Target { Base, Continuum, SymmetricK, PowerLowerBounds };
enum class Method { Separated, Coding, Both };

std::string to_string(Target t);
std::string to_string(Method m);

/// Pass bands keyed by the expected exponent.
struct Tolerances {
  double slope0 = 0.1;
  double slope1 = 0.15;
  double slope2 = 0.25;
  double slope3 = 0.4;
  /// Allowed gap between the separated and coding estimates of one target.
  double agreement = 0.2;

  double band(double expected) const noexcept;
};

/// Cloud and fit settings for one estimate.
struct SamplingPlan {
  double resolution = 1e-3;
  Grading grading;
  /// Anchor the grading at the fixed points of the map.
  bool anchor_fixed = true;
  std::vector<int> n_list;
  std::vector<double> eps_list;
};

/// Defaults sized for a desk-scale run of each target.
SamplingPlan default_plan(Target target, int k, Space space = Space::Interval);

struct SingularQuery {
  std::vector<Letter> letters;  ///< U1, U2
  int M = 50;
};

struct ExperimentConfig {
  MapDocument map{Homeo1D::identity(Space::Interval), {}};
  Target target = Target::Base;
  int k = 1;
  int k_max = 3;
  Method method = Method::Separated;
  SamplingPlan plan;
  /// Resolution given explicitly (config or command line); applies to every
  /// row of the theorem harnesses.
  std::optional<double> resolution_override;
  /// Letters for the coding route; empty selects the defaults of the target.
  std::vector<Letter> letters;
  std::vector<double> radii;
  std::optional<SingularQuery> singular;
  std::uint64_t seed = 1;
  double r2_threshold = 0.98;
  Tolerances tolerances;
  int horizon = 64;
  int verdict_horizon = 128;
  bool write_words = false;
  std::filesystem::path out_dir = "out";
  /// Print one progress line per finished row to stderr.
  bool verbose = false;
  /// The document the config was read from, echoed into reports.
  nlohmann::json source;
};

/// Parses a config document. Missing plan fields come from default_plan.
/// Errors carry the JSON field path, e.g. "config.n_list[2]".
ExperimentConfig parse_config(const nlohmann::json& j, const std::string& path = "config");
ExperimentConfig load_config(const std::filesystem::path& file);

/// Stable hex digest of a JSON document (FNV-1a over its compact dump).
std::string content_hash(const nlohmann::json& j);

/// Child seed for one cell of an experiment.
std::uint64_t cell_seed(std::uint64_t master, const std::string& label);

}  // namespace polyent
