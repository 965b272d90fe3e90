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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyent/config.hpp"

namespace polyent {

struct ReportRow {
  std::string label;
  Target target = Target::Base;
  int k = 1;
  Method method = Method::Separated;
  double expected = 0.0;
  double tolerance = 0.0;
  double estimate = 0.0;
  bool estimated = false;
  bool pass = false;
  std::string error;
  EntropyEstimate detail;
  std::string cloud_tag;
  std::size_t cloud_size = 0;
  double resolution = 0.0;
};

/// A named yes/no outcome: verdicts, eq2 thresholds, bound and ladder checks.
struct ReportCheck {
  std::string label;
  bool pass = false;
  nlohmann::json detail;
};

struct Report {
  std::string command;
  nlohmann::json config;
  std::string config_hash;
  std::vector<ReportRow> rows;
  std::vector<ReportCheck> checks;
  std::vector<std::string> warnings;
  /// Words of the first coding row at the smallest n, rendered.
  std::vector<std::string> words;
  double wall_seconds = 0.0;

  bool all_pass() const noexcept;
  const ReportRow* find(const std::string& label, Method m) const noexcept;
  /// Deterministic summary; wall time is kept out of it.
  nlohmann::json to_json() const;
  std::string counts_csv() const;
  /// Writes report.json, counts.csv, timing.json and words.txt (when words
  /// were collected) into dir.
  void write(const std::filesystem::path& dir) const;
};

/// Orientation-preserving version of f: f itself, or f^2 when f reverses.
Homeo1D preserving_version(const Homeo1D& f, std::vector<std::string>* warnings = nullptr);

/// Runs the target of the config with its method.
Report run(const ExperimentConfig& config);

/// Mutual-singularity verdict and eq2 threshold for config.singular on the
/// continuum system of the map.
Report run_singular(const ExperimentConfig& config);

/// Base, C(f) and f^{*k} rows for an interval map, plus the 2^f ladder.
Report reproduce_theorem_a(const ExperimentConfig& config);

/// Base, C(f) and f^{*k} rows for a circle map, dispatched on |Fix(f)|.
Report reproduce_theorem_b(const ExperimentConfig& config);

}  // namespace polyent
