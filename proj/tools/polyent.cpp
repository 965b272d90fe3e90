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

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyent/experiment.hpp"

namespace {

using namespace polyent;

constexpr int kOk = 0;
constexpr int kOutsideBand = 1;
constexpr int kError = 2;

void apply_thread_cap() {
  const char* env = std::getenv("POLYENT_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw ConfigError("POLYENT_THREADS", "expected a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<double> resolution;
  std::optional<int> kmax;
  bool verbose = false;
};

nlohmann::json read_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file, "cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(file, e.what());
  }
}

ExperimentConfig load(const Options& o, bool theorem) {
  nlohmann::json j = read_json(o.config);
  if (j.is_object() && j.contains("breakpoints")) j = nlohmann::json{{"map", j}};
  if (theorem && j.is_object() && !j.contains("method")) j["method"] = "both";
  ExperimentConfig c = parse_config(j);
  if (o.seed) c.seed = *o.seed;
  c.verbose = o.verbose;
  if (o.out) c.out_dir = *o.out;
  if (o.resolution) {
    if (!(*o.resolution > 0)) throw ConfigError("--resolution", "must be positive");
    c.plan.resolution = *o.resolution;
    c.resolution_override = *o.resolution;
  }
  if (o.kmax) {
    if (*o.kmax < 1 || *o.kmax > FinitePt::kMaxK) throw ConfigError("--kmax", "out of range");
    c.k_max = *o.kmax;
  }
  c.source["effective"] = {{"seed", c.seed},
                           {"k_max", c.k_max},
                           {"resolution", c.resolution_override ? nlohmann::json(*c.resolution_override)
                                                                : nlohmann::json(nullptr)}};
  return c;
}

void print(const Report& rep, const std::filesystem::path& out) {
  for (const auto& r : rep.rows) {
    std::printf("%-14s %-9s ", r.label.c_str(), to_string(r.method).c_str());
    if (r.estimated)
      std::printf("estimate %.3f  expected %.0f +- %.2f  %s\n", r.estimate, r.expected, r.tolerance,
                  r.pass ? "PASS" : "FAIL");
    else
      std::printf("no estimate (%s)  FAIL\n", r.error.c_str());
  }
  for (const auto& c : rep.checks) std::printf("%-40s %s\n", c.label.c_str(), c.pass ? "PASS" : "FAIL");
  for (const auto& w : rep.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("wrote %s (%.1f s)\n", out.string().c_str(), rep.wall_seconds);
}

int finish(const Report& rep, const ExperimentConfig& c) {
  rep.write(c.out_dir);
  print(rep, c.out_dir);
  return rep.all_pass() ? kOk : kOutsideBand;
}

int validate(const Options& o) {
  nlohmann::json j = read_json(o.config);
  const nlohmann::json& m = j.is_object() && j.contains("map") ? j["map"] : j;
  const auto doc = parse_map(m, j.contains("map") ? "config.map" : "map");
  const auto violations = polyent::validate(doc.map);
  nlohmann::json out = {{"space", to_string(doc.map.space())}, {"valid", violations.empty()}};
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations) vs.push_back({{"index", v.index}, {"message", v.message}});
  out["violations"] = vs;
  if (violations.empty()) out["fixed_points"] = fixed_points(doc.map);
  std::cout << out.dump(2) << "\n";
  return violations.empty() ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial entropy of PL interval and circle homeomorphisms and their induced maps"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Config or map JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "Master seed");
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--resolution", o.resolution, "Cloud step");
    sub->add_option("--kmax", o.kmax, "Largest k for f^{*k} rows");
    sub->add_flag("-v,--verbose", o.verbose, "Progress lines on stderr");
  };
  auto* v = app.add_subcommand("validate", "Check a map and list its fixed points");
  auto* e = app.add_subcommand("entropy", "Estimate polynomial entropy of the configured target");
  auto* c = app.add_subcommand("coding", "Estimate entropy relative to a letter family");
  auto* s = app.add_subcommand("singular", "Mutual-singularity verdict and eq2 threshold");
  auto* a = app.add_subcommand("theorem-a", "Base, C(f), f^{*k} and 2^f ladder for an interval map");
  auto* b = app.add_subcommand("theorem-b", "Base, C(f) and f^{*k} for a circle map");
  for (auto* sub : {v, e, c, s, a, b}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kError;
  }

  try {
    apply_thread_cap();
    if (v->parsed()) return validate(o);
    if (e->parsed()) {
      auto cfg = load(o, false);
      return finish(run(cfg), cfg);
    }
    if (c->parsed()) {
      auto cfg = load(o, false);
      cfg.method = Method::Coding;
      return finish(run(cfg), cfg);
    }
    if (s->parsed()) {
      auto cfg = load(o, false);
      return finish(run_singular(cfg), cfg);
    }
    if (a->parsed()) {
      auto cfg = load(o, true);
      return finish(reproduce_theorem_a(cfg), cfg);
    }
    auto cfg = load(o, true);
    return finish(reproduce_theorem_b(cfg), cfg);
  } catch (const polyent::Error& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kError;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return kError;
  }
}
