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

#include "polyent/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "polyent/error.hpp"

namespace polyent {

std::vector<double> graded_axis(double lo, double hi, double step, const Grading& g) {
  if (!(step > 0.0)) throw DomainError("sampling resolution must be positive");
  if (hi < lo) throw DomainError("empty sampling range");
  std::vector<double> out;
  const double span = hi - lo;
  const double ratio = span / step;
  const auto n = static_cast<long>(std::floor(ratio + 1e-9));
  const bool exact = std::fabs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio);
  for (long i = 0; i <= n; ++i)
    out.push_back(exact ? lo + span * (static_cast<double>(i) / static_cast<double>(n))
                        : lo + step * static_cast<double>(i));
  if (n == 0) out.assign({lo});
  if (!exact && out.back() < hi) out.push_back(hi);

  if (g.per_decade > 0) {
    const double q = std::pow(10.0, -1.0 / g.per_decade);
    for (double a : g.anchors) {
      if (a < lo || a > hi) continue;
      for (double o = span * q; o > g.min_offset; o *= q) {
        if (a + o <= hi) out.push_back(a + o);
        if (a - o >= lo) out.push_back(a - o);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string region_tag(const RegionSpec& r) {
  switch (r.kind) {
    case RegionKind::Axis: return "axis";
    case RegionKind::Triangle: return "triangle";
    case RegionKind::AkSimplex: return "ak-simplex-" + std::to_string(r.k);
    case RegionKind::AkStrict: return "ak-strict-" + std::to_string(r.k);
    case RegionKind::CircleA: return "circle-a";
    case RegionKind::CircleB: return "circle-b";
    case RegionKind::Dij: return "dij";
  }
  return "unknown";
}

bool in_circle_a(const HyperPoint& p, double a) noexcept {
  if (std::holds_alternative<FullCircle>(p)) return true;
  const auto* arc = std::get_if<ArcPt>(&p);
  if (!arc) return false;
  if (wrap01(arc->to) == wrap01(a)) return true;
  return wrap01(arc->from - a) <= wrap01(arc->to - a);
}

bool in_circle_b(const HyperPoint& p, double a) noexcept {
  if (std::holds_alternative<FullCircle>(p)) return true;
  const auto* arc = std::get_if<ArcPt>(&p);
  return arc && arc_contains(*arc, a);
}

namespace {

// Calls emit(subset) for every subset of `axis` of size in [min_size,
// max_size], in lexicographic order.
void for_each_subset(const std::vector<double>& axis, int min_size, int max_size,
                     const std::function<void(const double*, int)>& emit) {
  std::array<double, FinitePt::kMaxK> buf{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
    if (depth >= min_size) emit(buf.data(), depth);
    if (depth == max_size) return;
    for (std::size_t i = start; i < axis.size(); ++i) {
      buf[depth] = axis[i];
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

Grading circle_offsets(const Grading& g, double a) {
  Grading out = g;
  out.anchors.clear();
  for (double p : g.anchors) {
    double u = wrap01(p - a);
    out.anchors.push_back(u);
    if (u == 0.0) out.anchors.push_back(1.0);
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

}  // namespace

SampleCloud sample_region(const RegionSpec& r, double resolution, const Grading& grading) {
  if (!(resolution > 0.0)) throw DomainError("sample_region: resolution must be positive");
  SampleCloud cloud;
  cloud.tag = region_tag(r);
  cloud.space = r.space;
  cloud.k = r.k;
  cloud.resolution = resolution;
  auto& pts = cloud.points;

  auto axis_in_space = [&]() {
    auto axis = graded_axis(r.lo, r.hi, resolution, grading);
    if (r.space == Space::Circle) {
      for (double& x : axis) x = wrap01(x);
      std::sort(axis.begin(), axis.end());
      axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    }
    return axis;
  };

  switch (r.kind) {
    case RegionKind::Axis: {
      cloud.k = 1;
      for (double x : axis_in_space()) pts.push_back(FinitePt::singleton(x));
      break;
    }
    case RegionKind::Triangle: {
      if (r.space != Space::Interval) throw DomainError("Triangle is a region of C(I)");
      auto axis = axis_in_space();
      pts.reserve(axis.size() * (axis.size() + 1) / 2);
      for (std::size_t i = 0; i < axis.size(); ++i)
        for (std::size_t j = i; j < axis.size(); ++j) pts.push_back(IntervalPt{axis[i], axis[j]});
      break;
    }
    case RegionKind::AkSimplex:
    case RegionKind::AkStrict: {
      if (r.k < 1 || r.k > FinitePt::kMaxK) throw DomainError("sample_region: k out of range");
      auto axis = axis_in_space();
      int min_size = r.kind == RegionKind::AkStrict ? r.k : 1;
      for_each_subset(axis, min_size, r.k, [&](const double* p, int n) {
        pts.push_back(FinitePt::from_sorted(p, n, r.k));
      });
      break;
    }
    case RegionKind::CircleA:
    case RegionKind::CircleB: {
      if (r.space != Space::Circle) throw DomainError("CircleA/CircleB are regions of C(S^1)");
      auto u = graded_axis(0.0, 1.0, resolution, circle_offsets(grading, r.a));
      const bool is_a = r.kind == RegionKind::CircleA;
      bool full_done = false;
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
          double x = u[i], y = u[j];
          if (is_a) {
            // (x, y) offsets from a with x <= y; (0, 1) is the whole circle.
            if (x > y) continue;
            if (x == 0.0 && y == 1.0) {
              pts.push_back(FullCircle{});
            } else if (x == 1.0) {
              continue;  // {a} again
            } else {
              pts.push_back(ArcPt{wrap01(r.a + x), wrap01(r.a + y)});
            }
          } else {
            // Arcs through a: y <= x; x == y wraps all the way round.
            if (y > x) continue;
            if (x == y) {
              if (!full_done) pts.push_back(FullCircle{});
              full_done = true;
            } else if (x == 1.0 && y == 0.0) {
              pts.push_back(ArcPt{wrap01(r.a), wrap01(r.a)});
            } else {
              pts.push_back(ArcPt{wrap01(r.a + x), wrap01(r.a + y)});
            }
          }
        }
      }
      break;
    }
    case RegionKind::Dij: {
      if (r.space != Space::Circle) throw DomainError("Dij is a region of C(S^1)");
      auto axis_of = [&](const std::array<double, 2>& c) {
        double len = wrap01(c[1] - c[0]);
        if (len == 0.0) len = 1.0;
        Grading g = grading;
        g.anchors.clear();
        for (double p : grading.anchors) {
          double off = wrap01(p - c[0]);
          if (off <= len) g.anchors.push_back(off);
          if (off == 0.0) g.anchors.push_back(len);
        }
        auto ax = graded_axis(0.0, len, resolution, g);
        for (double& x : ax) x = wrap01(c[0] + x);
        return ax;
      };
      auto xi = axis_of(r.ci);
      auto yj = axis_of(r.cj);
      for (double x : xi)
        for (double y : yj) pts.push_back(ArcPt{x, y});
      break;
    }
  }
  if (pts.empty()) throw DomainError("sample_region: resolution too coarse to produce a point");
  return cloud;
}

void write_cloud_csv(const SampleCloud& cloud, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << "tag,space,k,resolution\n"
      << cloud.tag << ',' << to_string(cloud.space) << ',' << cloud.k << ','
      << format_double(cloud.resolution) << "\npoint\n";
  for (const auto& p : cloud.points) out << serialize(p) << '\n';
}

SampleCloud read_cloud_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string(), "cannot open");
  std::string line;
  std::getline(in, line);
  if (line != "tag,space,k,resolution") throw ConfigError(file.string(), "bad header");
  std::getline(in, line);
  std::stringstream ss(line);
  std::string tag, space, k, res;
  std::getline(ss, tag, ',');
  std::getline(ss, space, ',');
  std::getline(ss, k, ',');
  std::getline(ss, res, ',');
  SampleCloud cloud;
  cloud.tag = tag;
  if (space == "interval") cloud.space = Space::Interval;
  else if (space == "circle") cloud.space = Space::Circle;
  else throw ConfigError(file.string() + ":2", "unknown space '" + space + "'");
  try {
    cloud.k = std::stoi(k);
    cloud.resolution = std::stod(res);
  } catch (const std::exception&) {
    throw ConfigError(file.string() + ":2", "malformed k or resolution");
  }
  std::getline(in, line);
  if (line != "point") throw ConfigError(file.string() + ":3", "expected 'point'");
  std::size_t lineno = 3;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto p = parse_hyperpoint(line);
      if (auto* f = std::get_if<FinitePt>(&p))
        p = FinitePt::from_sorted(f->points().data(), f->size(), std::max(cloud.k, f->size()));
      cloud.points.push_back(p);
    } catch (const ConfigError& e) {
      throw ConfigError(file.string() + ":" + std::to_string(lineno), e.what());
    }
  }
  return cloud;
}

}  // namespace polyent
