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

// Acceptance checks. Each criterion prints one line:
//   criterion N: PASS|FAIL  <detail>  (<seconds> s)
// Usage: polyent_acceptance [N ...]   (no arguments runs all ten)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyent/coding.hpp"
#include "polyent/experiment.hpp"
#include "polyent/induced.hpp"
#include "polyent/sampling.hpp"

using namespace polyent;

namespace {

constexpr double kTolSlope1 = 0.15;
constexpr double kTolSlope2 = 0.25;
constexpr double kTolSlope3 = 0.40;
constexpr double kAgreement = 0.2;
constexpr double kBaseSeconds = 60.0;
constexpr double kContinuumSeconds = 300.0;
constexpr double kMetricSlack = 1e-12;
constexpr double kArcOracleTol = 2e-4;
constexpr int kTriples = 100000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Homeo1D half_map() { return Homeo1D::interval({{0, 0}, {0.5, 0.25}, {1, 1}}); }
Homeo1D circle_map() { return Homeo1D::circle({{0, 0}, {0.5, 0.7}, {1, 1}}); }

ExperimentConfig config_for(const Homeo1D& f, Target t, int k, Method m) {
  ExperimentConfig c;
  c.map = MapDocument{f, {}};
  c.target = t;
  c.k = k;
  c.k_max = k;
  c.method = m;
  c.plan = default_plan(t, k, f.space());
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const ReportRow* row_or_null(const Report& r, const std::string& label, Method m) {
  const auto* row = r.find(label, m);
  return row && row->estimated ? row : nullptr;
}

std::vector<double> axis_cloud(double step, int per_decade) {
  std::vector<double> out;
  for (const auto& p : sample_region({RegionKind::Axis}, step, Grading{{0.0, 1.0}, per_decade}).points)
    out.push_back(std::get<FinitePt>(p).front());
  return out;
}

Outcome criterion1() {
  auto cfg = config_for(half_map(), Target::Base, 1, Method::Separated);
  const double min_eps = *std::min_element(cfg.plan.eps_list.begin(), cfg.plan.eps_list.end());
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = run(cfg);
  const double secs = seconds_since(t0);
  const auto* row = row_or_null(rep, "base", Method::Separated);
  if (!row) return {false, "no base estimate"};
  const bool pass = std::abs(row->estimate - 1.0) <= kTolSlope1 && secs < kBaseSeconds &&
                    cfg.plan.resolution <= 1e-4 && cfg.plan.n_list.back() >= 4096 && min_eps <= 0.025;
  return {pass, fmt("slope %.3f (1 +- %.2f), step %g, n <= %d, eps >= %g, %.1f s (limit %.0f)", row->estimate,
                    kTolSlope1, cfg.plan.resolution, cfg.plan.n_list.back(), min_eps, secs, kBaseSeconds)};
}

Outcome criterion2() {
  auto cfg = config_for(half_map(), Target::Continuum, 1, Method::Separated);
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = run(cfg);
  const double secs = seconds_since(t0);
  const auto* row = row_or_null(rep, "C(f)", Method::Separated);
  if (!row) return {false, "no C(f) estimate"};
  const bool pass = std::abs(row->estimate - 2.0) <= kTolSlope2 && secs < kContinuumSeconds && cfg.plan.resolution <= 5e-3;
  return {pass, fmt("slope %.3f (2 +- %.2f), step %g, %zu intervals, %.1f s (limit %.0f)", row->estimate, kTolSlope2,
                    cfg.plan.resolution, row->cloud_size, secs, kContinuumSeconds)};
}

Outcome criterion3() {
  bool pass = true;
  std::string detail;
  for (int k : {2, 3}) {
    const double tol = k == 2 ? kTolSlope2 : kTolSlope3;
    const auto rep = run(config_for(half_map(), Target::SymmetricK, k, Method::Both));
    const std::string label = "f^{*" + std::to_string(k) + "}";
    const auto* sep = row_or_null(rep, label, Method::Separated);
    const auto* cod = row_or_null(rep, label, Method::Coding);
    if (!sep || !cod) return {false, label + ": missing estimate"};
    const bool ok = std::abs(sep->estimate - k) <= tol && std::abs(cod->estimate - k) <= tol &&
                    std::abs(sep->estimate - cod->estimate) <= kAgreement;
    pass = pass && ok;
    detail += fmt("%sk=%d separated %.3f coding %.3f (%d +- %.2f, gap <= %.1f)", detail.empty() ? "" : "; ", k,
                  sep->estimate, cod->estimate, k, tol, kAgreement);
  }
  return {pass, detail};
}

Outcome criterion4() {
  auto cfg = config_for(half_map(), Target::PowerLowerBounds, 3, Method::Separated);
  cfg.k_max = 3;
  const auto rep = run(cfg);
  bool pass = true;
  double prev = -INFINITY;
  std::string detail;
  for (int k = 1; k <= 3; ++k) {
    const double tol = k == 1 ? kTolSlope1 : k == 2 ? kTolSlope2 : kTolSlope3;
    const auto* row = row_or_null(rep, "f^{*" + std::to_string(k) + "}", Method::Separated);
    if (!row) return {false, fmt("k=%d: missing estimate", k)};
    pass = pass && row->estimate >= k - tol && row->estimate >= prev - tol;
    prev = std::max(prev, row->estimate);
    detail += fmt("%sk=%d %.3f", k == 1 ? "" : ", ", k, row->estimate);
  }
  return {pass, detail + " (each >= k - tol, non-decreasing within tol)"};
}

Outcome criterion5() {
  const auto f = circle_map();
  const auto rep = run(config_for(f, Target::Continuum, 1, Method::Separated));
  const auto* row = row_or_null(rep, "C(f)", Method::Separated);
  if (!row) return {false, "no C(f) estimate"};

  CircleContinuumSystem sys(f);
  const Grading g{{0.0, 1.0}, 10, 1e-12};
  auto a = sample_region({RegionKind::CircleA, Space::Circle, 1, 0.0}, 1e-2, g);
  auto b = sample_region({RegionKind::CircleB, Space::Circle, 1, 0.0}, 1e-2, g);
  auto points = a.points;
  points.insert(points.end(), b.points.begin(), b.points.end());
  const auto states = states_of(sys, points);
  const std::span<const Subarc> view(states);
  const int M = 50, horizon = 64, verdict_horizon = 128;

  Alphabet<CircleContinuumSystem> pair(sys, {Letter::ball(ArcPt{0.0, 0.3}, 0.05), Letter::ball(ArcPt{0.8, 0.0}, 0.05)});
  const auto sing = check_singular(pair, 0, 1, M, view, verdict_horizon);
  bool witness_ok = false;
  if (sing.witness) {
    Subarc w = sys.from_hyperpoint(*sing.witness), x = w, y = w;
    for (int t = 0; t < sing.n1; ++t) x = sys.step(x);
    for (int t = 0; t < sing.n2; ++t) y = sys.step(y);
    witness_ok = pair.in_letter(0, x) && pair.in_letter(1, y) && std::abs(sing.n1 - sing.n2) > M &&
                 std::min(sing.n1, sing.n2) >= 1;
  }
  Alphabet<CircleContinuumSystem> interior(
      sys, {Letter::ball(ArcPt{0.2, 0.3}, 0.02), Letter::ball(ArcPt{0.6, 0.75}, 0.02)});
  const auto apart = check_singular(interior, 0, 1, M, view, verdict_horizon);
  const auto L = eq2_condition(pair, 0, 1, view, horizon);

  const bool pass = std::abs(row->estimate - 2.0) <= kTolSlope2 && sing.verdict == Verdict::MutuallySingular &&
                    witness_ok && apart.verdict == Verdict::NotSingular && L.has_value();
  return {pass, fmt("C(f) slope %.3f (2 +- %.2f); [0->0.3],[0.8->0] %s (n1=%d n2=%d, witness %s); interior arcs %s; "
                    "eq2 L=%s",
                    row->estimate, kTolSlope2, to_string(sing.verdict).c_str(), sing.n1, sing.n2,
                    witness_ok ? "checked" : "bad", to_string(apart.verdict).c_str(),
                    L ? std::to_string(*L).c_str() : "none")};
}

// Word count of a letter that every orbit visits at most once, from the
// preimages f^{-t}(lo, hi] of the letter.
std::size_t preimage_word_count(const Homeo1D& f, const std::vector<double>& cloud, double lo, double hi, int n) {
  const Homeo1D g = invert(f);
  std::size_t count = 0;
  std::vector<char> visits(cloud.size(), 0);
  for (int t = 0; t < n; ++t) {
    bool any = false;
    for (std::size_t i = 0; i < cloud.size(); ++i)
      if (cloud[i] > lo && cloud[i] <= hi) any = visits[i] = 1;
    count += any;
    lo = g(lo);
    hi = g(hi);
  }
  return count + (std::find(visits.begin(), visits.end(), 0) != visits.end());
}

Outcome criterion6() {
  PointSystem sys(half_map());
  Alphabet<PointSystem> alpha(sys, {Letter::half_open(0.125, 0.25)});
  const auto cloud = axis_cloud(1e-4, 30);
  const std::span<const double> view(cloud);
  bool pass = true;
  std::string detail;
  for (int n : {4, 8, 16, 32}) {
    const auto words = word_count(alpha, view, n);
    const auto oracle = preimage_word_count(half_map(), cloud, 0.125, 0.25, n);
    pass = pass && words == static_cast<std::size_t>(n + 1) && words == oracle;
    detail += fmt("n=%d: %zu (oracle %zu); ", n, words, oracle);
  }
  const auto mv = max_visits(alpha, 0, view, 64);
  pass = pass && mv.max_visits == 1;
  return {pass, detail + fmt("max_visits %d", mv.max_visits)};
}

Outcome criterion7() {
  IntervalContinuumSystem sys(half_map());
  Alphabet<IntervalContinuumSystem> alpha(
      sys, {Letter::ball(IntervalPt{0.5, 1.0}, 0.1), Letter::ball(IntervalPt{0.0, 0.5}, 0.1)});
  const auto plan = default_plan(Target::Continuum, 1);
  Grading g = plan.grading;
  g.anchors = {0.0, 1.0};
  const auto states = states_of(sys, sample_region({RegionKind::Triangle}, plan.resolution, g).points);
  const std::span<const IntervalPt> view(states);
  const auto L = eq2_condition(alpha, 0, 1, view, 64);
  if (!L) return {false, "eq2 condition not met within horizon 64"};
  std::vector<int> ns;
  for (int n = *L + 2; n <= 64; ++n) ns.push_back(n);
  const auto table = word_counts(alpha, view, std::span<const int>(ns));
  int worst_n = -1;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (static_cast<std::int64_t>(table.counts[i]) < quadratic_word_bound(ns[i], *L)) {
      worst_n = ns[i];
      break;
    }
  const bool arithmetic = quadratic_word_bound(10, 0) == 55;
  const std::size_t last = ns.size() - 1;
  return {worst_n < 0 && arithmetic,
          fmt("L=%d, n=%d..%d all >= bound (n=64: %zu >= %lld)%s", *L, ns.front(), ns.back(), table.counts[last],
              static_cast<long long>(quadratic_word_bound(64, *L)),
              worst_n < 0 ? "" : fmt("; fails at n=%d", worst_n).c_str())};
}

// Hausdorff distance of two arcs from dense samples, nearest points found by
// binary search in the sorted samples.
double sampled_arc_distance(const Subarc& a, const Subarc& b, double step) {
  auto samples = [&](const Subarc& s) {
    std::vector<double> out;
    const double len = s.full ? 1.0 : wrap01(s.to - s.from);
    for (double t = 0; t < len; t += step) out.push_back(wrap01(s.from + t));
    out.push_back(wrap01(s.from + len));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto pa = samples(a), pb = samples(b);
  auto nearest = [](const std::vector<double>& q, double x) {
    auto it = std::lower_bound(q.begin(), q.end(), x);
    double best = std::min(circle_distance(x, q.front()), circle_distance(x, q.back()));
    if (it != q.end()) best = std::min(best, circle_distance(x, *it));
    if (it != q.begin()) best = std::min(best, circle_distance(x, *std::prev(it)));
    return best;
  };
  auto directed = [&](const std::vector<double>& p, const std::vector<double>& q) {
    double worst = 0;
    for (double x : p) worst = std::max(worst, nearest(q, x));
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> size(1, FinitePt::kMaxK);
  auto finite = [&](int k) {
    std::vector<double> pts(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, k)(rng)));
    for (double& x : pts) x = u(rng);
    return FinitePt(std::span<const double>(pts), k);
  };
  struct Kind {
    std::string name;
    Space space;
    std::function<HyperPoint()> draw;
  };
  const std::vector<Kind> kinds{
      {"C(I)", Space::Interval, [&] { double a = u(rng), b = u(rng); return HyperPoint{IntervalPt{std::min(a, b), std::max(a, b)}}; }},
      {"C(S1)", Space::Circle, [&] { return u(rng) < 0.02 ? HyperPoint{FullCircle{}} : HyperPoint{ArcPt{u(rng), u(rng)}}; }},
      {"I^{*3}", Space::Interval, [&] { return HyperPoint{finite(3)}; }},
      {"S1^{*3}", Space::Circle, [&] { return HyperPoint{finite(3)}; }},
      {"finite subsets of I", Space::Interval, [&] { return HyperPoint{finite(FinitePt::kMaxK)}; }},
      {"finite subsets of S1", Space::Circle, [&] { return HyperPoint{finite(FinitePt::kMaxK)}; }},
  };
  bool pass = true;
  std::string detail;
  for (const auto& kind : kinds) {
    double worst = 0;
    for (int i = 0; i < kTriples; ++i) {
      const auto a = kind.draw(), b = kind.draw(), c = kind.draw();
      const double ab = hausdorff(kind.space, a, b), ba = hausdorff(kind.space, b, a);
      const double bc = hausdorff(kind.space, b, c), ac = hausdorff(kind.space, a, c);
      worst = std::max({worst, hausdorff(kind.space, a, a), std::abs(ab - ba), ac - ab - bc, -ab});
    }
    pass = pass && worst <= kMetricSlack;
    detail += fmt("%s %.1e; ", kind.name.c_str(), worst);
  }
  double arc_err = 0;
  for (int i = 0; i < 500; ++i) {
    const Subarc a{u(rng), u(rng), i % 50 == 0}, b{u(rng), u(rng), false};
    arc_err = std::max(arc_err, std::abs(hausdorff(a, b) - sampled_arc_distance(a, b, 1e-4)));
  }
  pass = pass && arc_err <= kArcOracleTol;
  return {pass, detail + fmt("arc oracle max error %.1e (limit %.0e)", arc_err, kArcOracleTol)};
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool moves_iff_not_fixed(const Homeo1D& f, const SampleCloud& cloud, const std::vector<HyperPoint>& fixed,
                         std::size_t& checked) {
  const Space s = f.space();
  for (const auto& p : cloud.points) {
    const bool is_fixed = std::any_of(fixed.begin(), fixed.end(), [&](const HyperPoint& q) {
      return kind_of(p) == kind_of(q) && hausdorff(s, p, q) == 0.0;
    });
    const HyperPoint img = std::holds_alternative<FinitePt>(p) ? HyperPoint{induce_symmetric(f, std::get<FinitePt>(p))}
                                                               : induce_continuum(f, p);
    if ((hausdorff(s, img, p) > 0.0) == is_fixed) return false;
    ++checked;
  }
  return true;
}

Outcome criterion9() {
  const std::vector<Homeo1D> interval_maps{
      half_map(), Homeo1D::interval({{0, 0}, {0.15, 0.1}, {0.3, 0.3}, {0.65, 0.5}, {1, 1}}),
      Homeo1D::interval({{0, 0}, {0.1, 0.05}, {0.2, 0.2}, {0.3, 0.35}, {0.4, 0.4}, {0.7, 0.6}, {1, 1}})};
  const std::vector<Homeo1D> circle_maps{circle_map(),
                                         Homeo1D::circle({{0, 0}, {0.25, 0.15}, {0.5, 0.5}, {0.75, 0.85}, {1, 1}})};
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;
  for (const auto& f : interval_maps) {
    const std::size_t m = fixed_points(f).size();
    const auto cont = fixed_hyperpoints(f, HyperKind::Continuum);
    pass = pass && cont.size() == m * (m + 1) / 2;
    detail += fmt("|Fix|=%zu: C %zu", m, cont.size());
    for (int k = 1; k <= 3; ++k) {
      std::size_t expected = 0;
      for (int s = 1; s <= k; ++s) expected += binomial(m, static_cast<std::size_t>(s));
      const auto sym = fixed_hyperpoints(f, HyperKind::Symmetric, k);
      pass = pass && sym.size() == expected;
      detail += fmt(", *%d %zu", k, sym.size());
    }
    detail += "; ";
    pass = pass && moves_iff_not_fixed(f, sample_region({RegionKind::Triangle}, 0.02), cont, checked);
    for (int k = 2; k <= 3; ++k)
      pass = pass && moves_iff_not_fixed(f, sample_region({RegionKind::AkSimplex, Space::Interval, k}, 0.05),
                                         fixed_hyperpoints(f, HyperKind::Symmetric, k), checked);
  }
  for (const auto& f : circle_maps) {
    const auto fix = fixed_points(f);
    const std::size_t m = fix.size();
    const auto cont = fixed_hyperpoints(f, HyperKind::Continuum);
    pass = pass && cont.size() == m * m + 1;
    detail += fmt("circle |Fix|=%zu: C %zu; ", m, cont.size());
    for (auto kind : {RegionKind::CircleA, RegionKind::CircleB})
      pass = pass && moves_iff_not_fixed(f, sample_region({kind, Space::Circle, 1, fix[0]}, 0.02), cont, checked);
  }
  return {pass, detail + fmt("%zu sampled hyperpoints move iff not fixed", checked)};
}

template <DynamicalSystem S>
bool nested_counts_ok(const S& sys, const std::vector<Letter>& letters, std::span<const typename S::State> cloud,
                      std::size_t& compared) {
  std::vector<int> ns;
  for (int n = 1; n <= 64; ++n) ns.push_back(n);
  std::vector<std::size_t> prev;
  for (std::size_t L = 0; L <= letters.size(); ++L) {
    Alphabet<S> alpha(sys, std::vector<Letter>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(L)));
    const auto counts = word_counts(alpha, cloud, std::span<const int>(ns)).counts;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (prev[i] > counts[i]) return false;
      ++compared;
    }
    prev = counts;
  }
  return true;
}

Outcome criterion10() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  const auto f = half_map();
  PointSystem ps(f);
  const auto cloud = axis_cloud(1e-3, 10);
  bool pass = true;
  std::size_t compared = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> cuts(8);
    for (double& c : cuts) c = u(rng);
    std::sort(cuts.begin(), cuts.end());
    std::vector<Letter> letters;
    for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) letters.push_back(Letter::half_open(cuts[i], cuts[i + 1]));
    std::shuffle(letters.begin(), letters.end(), rng);
    pass = pass && nested_counts_ok(ps, letters, std::span<const double>(cloud), compared);
  }
  IntervalContinuumSystem cs(f);
  const auto states = states_of(cs, sample_region({RegionKind::Triangle}, 2e-2, Grading{{0.0, 1.0}, 5}).points);
  const std::vector<Letter> balls{Letter::ball(IntervalPt{0.5, 1.0}, 0.04), Letter::ball(IntervalPt{0.0, 0.5}, 0.04),
                                  Letter::ball(IntervalPt{0.2, 0.3}, 0.04), Letter::ball(IntervalPt{0.6, 0.7}, 0.04)};
  pass = pass && nested_counts_ok(cs, balls, std::span<const IntervalPt>(states), compared);
  return {pass, fmt("%zu (family, n) pairs compared, n = 1..64, no decrease", compared)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "unknown criterion %d\n", n);
      return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s  (%.1f s)\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
