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

#include "polyent/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

namespace polyent {

using nlohmann::json;

std::string to_string(Target t) {
  switch (t) {
    case Target::Base: return "base";
    case Target::Continuum: return "continuum";
    case Target::SymmetricK: return "symmetric";
    case Target::PowerLowerBounds: return "power_lower_bounds";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Separated: return "separated";
    case Method::Coding: return "coding";
    case Method::Both: return "both";
  }
  return "?";
}

double Tolerances::band(double expected) const noexcept {
  if (expected < 0.5) return slope0;
  if (expected < 1.5) return slope1;
  if (expected < 2.5) return slope2;
  return slope3;
}

SamplingPlan default_plan(Target target, int k, Space space) {
  SamplingPlan p;
  p.grading.min_offset = 1e-16;
  switch (target) {
    case Target::Base:
      p.resolution = 1e-4;
      p.grading.per_decade = 60;
      p.eps_list = {0.1, 0.05, 0.025};
      p.n_list = {8, 11, 16, 23, 32, 45, 64, 91, 128, 256, 512, 1024, 2048, 4096};
      break;
    case Target::Continuum:
      p.n_list = {8, 11, 16, 23, 32, 45, 64, 91};
      if (space == Space::Circle) {
        p.resolution = 2e-2;
        p.grading.per_decade = 5;
        p.eps_list = {0.2};
      } else {
        p.resolution = 5e-3;
        p.grading.per_decade = 30;
        p.eps_list = {0.2, 0.1};
      }
      break;
    case Target::SymmetricK:
    case Target::PowerLowerBounds:
      if (k <= 1) {
        p = default_plan(Target::Base, 1);
      } else if (k == 2) {
        p.resolution = 1e-2;
        p.grading.per_decade = 20;
        p.eps_list = {0.2, 0.1};
        p.n_list = {8, 11, 16, 23, 32, 45, 64, 91};
      } else {
        p.resolution = 5e-2;
        p.grading.per_decade = 5;
        p.grading.min_offset = 1e-12;
        p.eps_list = {0.2};
        p.n_list = {8, 11, 16, 23, 32, 45};
      }
      break;
  }
  return p;
}

namespace {

const json* member(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double read_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path, "must be finite");
  return d;
}

long long read_integer(const json& v, const std::string& path, long long min) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  long long i = v.get<long long>();
  if (i < min) throw ConfigError(path, "must be >= " + std::to_string(min));
  return i;
}

std::string read_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw ConfigError(path, "expected a string");
  return v.get<std::string>();
}

template <class T, class Fn>
std::vector<T> read_array(const json& v, const std::string& path, Fn&& item) {
  if (!v.is_array()) throw ConfigError(path, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(item(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError(path + "." + it.key(), "unknown field");
}

Letter read_letter(const json& v, const std::string& path) {
  if (!v.is_object()) throw ConfigError(path, "expected an object");
  reject_unknown(v, path, {"kind", "lo", "hi", "center", "radius", "name"});
  const json* kind = member(v, "kind");
  if (!kind) throw ConfigError(path + ".kind", "missing");
  LetterKind lk;
  try {
    lk = parse_letter_kind(read_string(*kind, path + ".kind"));
  } catch (const DomainError& e) {
    throw ConfigError(path + ".kind", e.what());
  }
  std::string name = member(v, "name") ? read_string(v["name"], path + ".name") : "";
  auto need = [&](const char* key) -> const json& {
    if (!member(v, key)) throw ConfigError(path + "." + key, "missing");
    return v[key];
  };
  if (lk == LetterKind::Ball) {
    HyperPoint c;
    try {
      c = parse_hyperpoint(read_string(need("center"), path + ".center"));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ".center", e.what());
    } catch (const DomainError& e) {
      throw ConfigError(path + ".center", e.what());
    }
    const double r = read_number(need("radius"), path + ".radius");
    if (!(r > 0)) throw ConfigError(path + ".radius", "must be positive");
    return Letter::ball(c, r, name);
  }
  const double lo = read_number(need("lo"), path + ".lo");
  const double hi = read_number(need("hi"), path + ".hi");
  return lk == LetterKind::HalfOpen ? Letter::half_open(lo, hi, name) : Letter::band_hit(lo, hi, name);
}

}  // namespace

ExperimentConfig parse_config(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  reject_unknown(j, path,
                 {"map", "target", "k", "k_max", "method", "resolution", "grading", "n_list", "eps_list",
                  "radii", "letters", "singular", "seed", "r2_threshold", "tolerances", "horizon", "verdict_horizon", "words", "out"});
  ExperimentConfig c;
  c.source = j;
  if (!member(j, "map")) throw ConfigError(path + ".map", "missing");
  c.map = parse_map(j["map"], path + ".map");

  if (const json* t = member(j, "target")) {
    const auto s = read_string(*t, path + ".target");
    if (s == "base") c.target = Target::Base;
    else if (s == "continuum") c.target = Target::Continuum;
    else if (s == "symmetric") c.target = Target::SymmetricK;
    else if (s == "power_lower_bounds") c.target = Target::PowerLowerBounds;
    else throw ConfigError(path + ".target", "must be base, continuum, symmetric or power_lower_bounds");
  }
  if (const json* v = member(j, "k")) c.k = static_cast<int>(read_integer(*v, path + ".k", 1));
  if (const json* v = member(j, "k_max")) c.k_max = static_cast<int>(read_integer(*v, path + ".k_max", 1));
  if (c.k > FinitePt::kMaxK) throw ConfigError(path + ".k", "must be <= " + std::to_string(FinitePt::kMaxK));
  if (c.k_max > FinitePt::kMaxK)
    throw ConfigError(path + ".k_max", "must be <= " + std::to_string(FinitePt::kMaxK));
  if (const json* m = member(j, "method")) {
    const auto s = read_string(*m, path + ".method");
    if (s == "separated") c.method = Method::Separated;
    else if (s == "coding") c.method = Method::Coding;
    else if (s == "both") c.method = Method::Both;
    else throw ConfigError(path + ".method", "must be separated, coding or both");
  }

  c.plan = default_plan(c.target, c.target == Target::PowerLowerBounds ? c.k_max : c.k, c.map.map.space());
  if (const json* v = member(j, "resolution")) {
    c.plan.resolution = read_number(*v, path + ".resolution");
    if (!(c.plan.resolution > 0)) throw ConfigError(path + ".resolution", "must be positive");
    c.resolution_override = c.plan.resolution;
  }
  if (const json* g = member(j, "grading")) {
    const std::string gp = path + ".grading";
    if (!g->is_object()) throw ConfigError(gp, "expected an object");
    reject_unknown(*g, gp, {"per_decade", "min_offset", "anchors"});
    if (const json* v = member(*g, "per_decade"))
      c.plan.grading.per_decade = static_cast<int>(read_integer(*v, gp + ".per_decade", 0));
    if (const json* v = member(*g, "min_offset")) {
      c.plan.grading.min_offset = read_number(*v, gp + ".min_offset");
      if (!(c.plan.grading.min_offset > 0)) throw ConfigError(gp + ".min_offset", "must be positive");
    }
    if (const json* v = member(*g, "anchors")) {
      if (v->is_string() && v->get<std::string>() == "fixed") {
        c.plan.anchor_fixed = true;
      } else {
        c.plan.anchor_fixed = false;
        c.plan.grading.anchors = read_array<double>(*v, gp + ".anchors", read_number);
      }
    }
  }
  if (const json* v = member(j, "n_list")) {
    c.plan.n_list = read_array<int>(*v, path + ".n_list", [](const json& x, const std::string& p) {
      return static_cast<int>(read_integer(x, p, 1));
    });
    for (std::size_t i = 1; i < c.plan.n_list.size(); ++i)
      if (c.plan.n_list[i] <= c.plan.n_list[i - 1])
        throw ConfigError(path + ".n_list[" + std::to_string(i) + "]", "n_list must be strictly increasing");
    if (c.plan.n_list.size() < 3) throw ConfigError(path + ".n_list", "need at least 3 values");
  }
  if (const json* v = member(j, "eps_list")) {
    c.plan.eps_list = read_array<double>(*v, path + ".eps_list", [](const json& x, const std::string& p) {
      double e = read_number(x, p);
      if (!(e > 0)) throw ConfigError(p, "must be positive");
      return e;
    });
    if (c.plan.eps_list.empty()) throw ConfigError(path + ".eps_list", "must not be empty");
  }
  if (const json* v = member(j, "radii")) {
    c.radii = read_array<double>(*v, path + ".radii", [](const json& x, const std::string& p) {
      double r = read_number(x, p);
      if (!(r > 0)) throw ConfigError(p, "must be positive");
      return r;
    });
  }
  if (const json* v = member(j, "letters")) c.letters = read_array<Letter>(*v, path + ".letters", read_letter);
  if (const json* s = member(j, "singular")) {
    const std::string sp = path + ".singular";
    if (!s->is_object()) throw ConfigError(sp, "expected an object");
    reject_unknown(*s, sp, {"letters", "M"});
    SingularQuery q;
    if (!member(*s, "letters")) throw ConfigError(sp + ".letters", "missing");
    q.letters = read_array<Letter>((*s)["letters"], sp + ".letters", read_letter);
    if (q.letters.size() != 2) throw ConfigError(sp + ".letters", "expected exactly two letters");
    if (const json* v = member(*s, "M")) q.M = static_cast<int>(read_integer(*v, sp + ".M", 0));
    c.singular = std::move(q);
  }
  if (const json* v = member(j, "seed")) c.seed = static_cast<std::uint64_t>(read_integer(*v, path + ".seed", 0));
  if (const json* v = member(j, "r2_threshold")) c.r2_threshold = read_number(*v, path + ".r2_threshold");
  if (const json* t = member(j, "tolerances")) {
    const std::string tp = path + ".tolerances";
    if (!t->is_object()) throw ConfigError(tp, "expected an object");
    reject_unknown(*t, tp, {"slope0", "slope1", "slope2", "slope3", "agreement"});
    auto rd = [&](const char* key, double& dst) {
      if (const json* v = member(*t, key)) {
        dst = read_number(*v, tp + "." + key);
        if (!(dst >= 0)) throw ConfigError(tp + "." + key, "must be non-negative");
      }
    };
    rd("slope0", c.tolerances.slope0);
    rd("slope1", c.tolerances.slope1);
    rd("slope2", c.tolerances.slope2);
    rd("slope3", c.tolerances.slope3);
    rd("agreement", c.tolerances.agreement);
  }
  if (const json* v = member(j, "horizon")) c.horizon = static_cast<int>(read_integer(*v, path + ".horizon", 1));
  if (const json* v = member(j, "verdict_horizon"))
    c.verdict_horizon = static_cast<int>(read_integer(*v, path + ".verdict_horizon", 1));
  if (const json* v = member(j, "words")) {
    if (!v->is_boolean()) throw ConfigError(path + ".words", "expected true or false");
    c.write_words = v->get<bool>();
  }
  if (const json* v = member(j, "out")) c.out_dir = read_string(*v, path + ".out");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string(), "cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(file.string(), e.what());
  }
  return parse_config(j);
}

std::string content_hash(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t cell_seed(std::uint64_t master, const std::string& label) {
  std::uint64_t z = master;
  for (unsigned char ch : label) z = (z ^ ch) * 0x100000001b3ULL;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace polyent
