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

#include "polyent/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>

#include "polyent/estimate.hpp"
#include "polyent/sampling.hpp"

namespace polyent {

using nlohmann::json;

namespace {

struct Gap {
  double lo = 0.0;
  double hi = 1.0;  // may exceed 1 on the circle
};

std::vector<double> require_fixed(const Homeo1D& f) {
  auto fix = fixed_points(f);
  if (fix.empty()) throw DomainError("the map has no fixed points; a finite non-empty fixed set is required");
  return fix;
}

Gap first_gap(const Homeo1D& f) {
  const auto fix = require_fixed(f);
  if (fix.size() == 1) return {fix[0], fix[0] + 1.0};
  return {fix[0], fix[1]};
}

double lift_shift(const Homeo1D& f, double a) {
  return f.space() == Space::Circle ? std::round(f.lift(a) - a) : 0.0;
}

double wrap_if(Space s, double x) { return s == Space::Circle ? wrap01(x) : x; }

SamplingPlan plan_for(const ExperimentConfig& cfg, Target t, int k) {
  SamplingPlan p = default_plan(t, k, cfg.map.map.space());
  if (cfg.resolution_override) p.resolution = *cfg.resolution_override;
  return p;
}

Grading anchored(const SamplingPlan& plan, const Homeo1D& f) {
  Grading g = plan.grading;
  if (plan.anchor_fixed) {
    g.anchors = fixed_points(f);
    if (f.space() == Space::Circle)
      for (double a : std::vector<double>(g.anchors))
        if (a == 0.0) g.anchors.push_back(1.0);
  }
  return g;
}

/// (m, f(m)] or (f(m), m] for the midpoint m of the gap: a fundamental domain
/// that every wandering orbit of the gap crosses exactly once.
Letter fundamental_letter(const Homeo1D& f, const Gap& gap, LetterKind kind) {
  const double m = 0.5 * (gap.lo + gap.hi);
  const double fm = f.lift(m) - lift_shift(f, gap.lo);
  const double lo = wrap_if(f.space(), std::min(m, fm)), hi = wrap_if(f.space(), std::max(m, fm));
  return kind == LetterKind::BandHit ? Letter::band_hit(lo, hi, "Y1") : Letter::half_open(lo, hi, "Y1");
}

/// Balls around [m, hi] and [lo, m] for the midpoint m of the gap.
std::vector<Letter> continuum_letters(const Homeo1D& f, const Gap& gap) {
  const double m = 0.5 * (gap.lo + gap.hi);
  const double r = (gap.hi - gap.lo) / 10.0;
  if (f.space() == Space::Interval)
    return {Letter::ball(IntervalPt{m, gap.hi}, r, "Y1"), Letter::ball(IntervalPt{gap.lo, m}, r, "Y2")};
  return {Letter::ball(ArcPt{wrap01(m), wrap01(gap.hi)}, r, "Y1"),
          Letter::ball(ArcPt{wrap01(gap.lo), wrap01(m)}, r, "Y2")};
}

struct RowSpec {
  std::string label;
  Target target = Target::Base;
  int k = 1;
  double expected = 0.0;
  SamplingPlan plan;
  /// Seeds the packing order; rows over the same cloud share it.
  std::string seed_key;
};

template <DynamicalSystem Sys>
void estimate_rows(const Sys& sys, const SampleCloud& cloud, const RowSpec& spec, const std::vector<Letter>& letters,
                   const ExperimentConfig& cfg, Report& rep) {
  const auto states = states_of(sys, cloud.points);
  const std::span<const typename Sys::State> view(states);
  auto make_row = [&](Method m) {
    ReportRow r;
    r.label = spec.label;
    r.target = spec.target;
    r.k = spec.k;
    r.method = m;
    r.expected = spec.expected;
    r.tolerance = cfg.tolerances.band(spec.expected);
    r.cloud_tag = cloud.tag;
    r.cloud_size = states.size();
    r.resolution = cloud.resolution;
    return r;
  };
  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](ReportRow& r) {
    if (cfg.verbose)
      std::fprintf(stderr, "%-8s %-10s %-9s %zu states  %.1f s\n", r.label.c_str(), to_string(r.method).c_str(),
                   r.estimated ? std::to_string(r.estimate).substr(0, 5).c_str() : "-", states.size(),
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    for (const auto& w : r.detail.warnings) rep.warnings.push_back(r.label + " (" + to_string(r.method) + "): " + w);
    r.pass = r.estimated && std::abs(r.estimate - r.expected) <= r.tolerance;
    rep.rows.push_back(std::move(r));
  };
  const ReportRow* sep = nullptr;
  if (cfg.method != Method::Coding) {
    ReportRow r = make_row(Method::Separated);
    try {
      EstimateOptions opt;
      opt.eps_list = spec.plan.eps_list;
      opt.n_list = spec.plan.n_list;
      opt.r2_threshold = cfg.r2_threshold;
      opt.pack.seed = cell_seed(cfg.seed, spec.seed_key.empty() ? spec.label : spec.seed_key);
      r.detail = estimate_hpol(sys, view, opt, cloud.resolution);
      r.estimate = r.detail.value;
      r.estimated = true;
    } catch (const EstimationError& e) {
      r.error = e.what();
    }
    finish(r);
    sep = &rep.rows.back();
  }
  if (cfg.method != Method::Separated) {
    ReportRow r = make_row(Method::Coding);
    Alphabet<Sys> alpha(sys, letters);
    try {
      r.detail = relative_entropy(alpha, view, std::span<const int>(spec.plan.n_list));
      r.estimate = r.detail.value;
      r.estimated = true;
    } catch (const EstimationError& e) {
      r.error = e.what();
    }
    if (cfg.write_words && rep.words.empty()) {
      const int n0[1] = {spec.plan.n_list.front()};
      const auto table = word_counts(alpha, view, std::span<const int>(n0), true, true);
      for (const auto& w : table.words.front()) rep.words.push_back(w.render(alpha.names()));
    }
    finish(r);
    if (sep) {
      sep = &rep.rows[rep.rows.size() - 2];
      const auto& cod = rep.rows.back();
      const bool both = sep->estimated && cod.estimated;
      const double gap = both ? std::abs(sep->estimate - cod.estimate) : INFINITY;
      rep.checks.push_back({"agreement " + spec.label, both && gap <= cfg.tolerances.agreement,
                            {{"separated", sep->estimate}, {"coding", cod.estimate},
                             {"gap", both ? json(gap) : json(nullptr)}, {"tolerance", cfg.tolerances.agreement}}});
    }
  }
}

SampleCloud merge_clouds(std::vector<SampleCloud> parts, std::string tag) {
  SampleCloud out = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i)
    out.points.insert(out.points.end(), parts[i].points.begin(), parts[i].points.end());
  out.tag = std::move(tag);
  return out;
}

void point_rows(const Homeo1D& f, const Gap& domain, const RowSpec& spec, const ExperimentConfig& cfg,
                const std::vector<Letter>& letters, Report& rep) {
  PointSystem sys(f);
  RowSpec s = spec;
  s.seed_key = "point";
  RegionSpec r;
  r.kind = RegionKind::Axis;
  r.space = f.space();
  r.lo = domain.lo;
  r.hi = domain.hi;
  auto cloud = sample_region(r, spec.plan.resolution, anchored(spec.plan, f));
  estimate_rows(sys, cloud, s, letters, cfg, rep);
}

void base_rows(const Homeo1D& f, const ExperimentConfig& cfg, const SamplingPlan& plan, Report& rep) {
  const Gap gap = first_gap(f);
  std::vector<Letter> letters = cfg.letters;
  if (letters.empty()) letters = {fundamental_letter(f, gap, LetterKind::HalfOpen)};
  point_rows(f, {0.0, 1.0}, {"base", Target::Base, 1, 1.0, plan, {}}, cfg, letters, rep);
}

SampleCloud circle_continuum_cloud(const Homeo1D& f, const SamplingPlan& plan) {
  const auto fix = require_fixed(f);
  const Grading g = anchored(plan, f);
  if (fix.size() == 1) {
    RegionSpec a{RegionKind::CircleA, Space::Circle, 1, fix[0]};
    RegionSpec b{RegionKind::CircleB, Space::Circle, 1, fix[0]};
    return merge_clouds({sample_region(a, plan.resolution, g), sample_region(b, plan.resolution, g)},
                        "circle-a+circle-b");
  }
  std::vector<SampleCloud> parts;
  for (std::size_t i = 0; i < fix.size(); ++i)
    for (std::size_t j = 0; j < fix.size(); ++j) {
      RegionSpec r{RegionKind::Dij, Space::Circle};
      r.ci = {fix[i], fix[(i + 1) % fix.size()]};
      r.cj = {fix[j], fix[(j + 1) % fix.size()]};
      parts.push_back(sample_region(r, plan.resolution, g));
    }
  return merge_clouds(std::move(parts), "dij-union");
}

/// Quadratic lower bound of word counts from the eq2 threshold of Y1, Y2.
template <DynamicalSystem Sys>
void quadratic_check(const Sys& sys, const SampleCloud& cloud, const std::vector<Letter>& letters,
                     const SamplingPlan& plan, const ExperimentConfig& cfg, const std::string& label, Report& rep) {
  const auto states = states_of(sys, cloud.points);
  const std::span<const typename Sys::State> view(states);
  Alphabet<Sys> alpha(sys, letters);
  const auto L = eq2_condition(alpha, 0, 1, view, cfg.horizon);
  json detail = {{"L", L ? json(*L) : json(nullptr)}, {"horizon", cfg.horizon}};
  bool pass = L.has_value();
  if (L) {
    const auto table = word_counts(alpha, view, std::span<const int>(plan.n_list));
    json rows = json::array();
    for (std::size_t i = 0; i < table.n_list.size(); ++i) {
      const int n = table.n_list[i];
      if (n < *L + 2) continue;
      const auto bound = quadratic_word_bound(n, *L);
      const bool ok = static_cast<std::int64_t>(table.counts[i]) >= bound;
      pass = pass && ok;
      rows.push_back({{"n", n}, {"words", table.counts[i]}, {"bound", bound}, {"ok", ok}});
    }
    detail["counts"] = rows;
  }
  rep.checks.push_back({"quadratic bound " + label, pass, detail});
}

void continuum_rows(const Homeo1D& f, const ExperimentConfig& cfg, const SamplingPlan& plan, Report& rep) {
  const Gap gap = first_gap(f);
  std::vector<Letter> letters = cfg.letters;
  if (letters.empty()) letters = continuum_letters(f, gap);
  const RowSpec spec{"C(f)", Target::Continuum, 1, 2.0, plan, {}};
  if (f.space() == Space::Interval) {
    IntervalContinuumSystem sys(f);
    RegionSpec r{RegionKind::Triangle, Space::Interval};
    auto cloud = sample_region(r, plan.resolution, anchored(plan, f));
    estimate_rows(sys, cloud, spec, letters, cfg, rep);
    if (cfg.method != Method::Separated && letters.size() >= 2)
      quadratic_check(sys, cloud, letters, plan, cfg, spec.label, rep);
  } else {
    CircleContinuumSystem sys(f);
    auto cloud = circle_continuum_cloud(f, plan);
    estimate_rows(sys, cloud, spec, letters, cfg, rep);
    if (cfg.method != Method::Separated && letters.size() >= 2)
      quadratic_check(sys, cloud, letters, plan, cfg, spec.label, rep);
  }
}

/// f^{*k} on subsets of the first gap; circle maps go through the interval
/// map conjugate to f on that gap.
void symmetric_rows(const Homeo1D& f, int k, const ExperimentConfig& cfg, const SamplingPlan& plan,
                    const std::vector<Letter>& custom, Report& rep) {
  const Gap gap0 = first_gap(f);
  const Homeo1D g = f.space() == Space::Circle ? restrict_to(f, gap0.lo, gap0.hi) : f;
  const Gap gap = f.space() == Space::Circle ? Gap{0.0, 1.0} : gap0;
  const RowSpec spec{"f^{*" + std::to_string(k) + "}", Target::SymmetricK, k, static_cast<double>(k), plan, {}};
  if (k == 1) {
    std::vector<Letter> letters = custom;
    if (letters.empty()) letters = {fundamental_letter(g, gap, LetterKind::HalfOpen)};
    point_rows(g, gap, spec, cfg, letters, rep);
    return;
  }
  std::vector<Letter> letters = custom;
  if (letters.empty()) letters = {fundamental_letter(g, gap, LetterKind::BandHit)};
  SymmetricSystem sys(g, k);
  RegionSpec r{RegionKind::AkSimplex, Space::Interval, k};
  r.lo = gap.lo;
  r.hi = gap.hi;
  auto cloud = sample_region(r, plan.resolution, anchored(plan, g));
  estimate_rows(sys, cloud, spec, letters, cfg, rep);
}

/// Rows f^{*1..k_max} and the monotone lower-bound ladder for 2^f.
void ladder_rows(const Homeo1D& f, const ExperimentConfig& cfg, Report& rep) {
  const Method m = cfg.method == Method::Coding ? Method::Coding : Method::Separated;
  for (int k = 1; k <= cfg.k_max; ++k) symmetric_rows(f, k, cfg, plan_for(cfg, Target::SymmetricK, k), {}, rep);
  double prev = -INFINITY;
  for (int k = 1; k <= cfg.k_max; ++k) {
    const ReportRow* row = rep.find("f^{*" + std::to_string(k) + "}", m);
    const double tol = cfg.tolerances.band(k);
    const bool have = row && row->estimated;
    const double est = have ? row->estimate : NAN;
    const bool pass = have && est >= k - tol && est >= prev - tol;
    rep.checks.push_back({"2^f ladder k=" + std::to_string(k), pass,
                          {{"estimate", have ? json(est) : json(nullptr)},
                           {"lower_bound", k - tol},
                           {"previous", std::isfinite(prev) ? json(prev) : json(nullptr)},
                           {"method", to_string(m)}}});
    if (have) prev = std::max(prev, est);
  }
}

template <class Fn>
Report timed(const std::string& command, const ExperimentConfig& cfg, Fn&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command;
  rep.config = cfg.source;
  rep.config_hash = content_hash(cfg.source);
  body(rep);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

json estimate_json(const EntropyEstimate& e) {
  json per = json::array();
  for (const auto& f : e.per_eps) {
    json counts = json::array();
    for (const auto& c : f.counts) counts.push_back({{"n", c.n}, {"count", c.count}});
    per.push_back({{"eps", f.eps},
                   {"ok", f.ok},
                   {"slope", f.fit.slope},
                   {"n0", f.fit.n0},
                   {"r2", f.fit.r2},
                   {"plain_slope", f.fit.plain_slope},
                   {"plain_r2", f.fit.plain_r2},
                   {"used_points", f.fit.used},
                   {"saturated", f.fit.saturated},
                   {"error", f.error},
                   {"counts", counts}});
  }
  return {{"value", e.value}, {"final_eps", e.final_eps}, {"n_min", e.n_min}, {"n_max", e.n_max}, {"per_eps", per}};
}

}  // namespace

Homeo1D preserving_version(const Homeo1D& f, std::vector<std::string>* warnings) {
  require_valid(f);
  if (f.orientation() == Orientation::Preserving) return f;
  if (warnings) warnings->push_back("orientation-reversing map replaced by its square");
  return power(f, 2);
}

bool Report::all_pass() const noexcept {
  for (const auto& r : rows)
    if (!r.pass) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const ReportRow* Report::find(const std::string& label, Method m) const noexcept {
  for (const auto& r : rows)
    if (r.label == label && r.method == m) return &r;
  return nullptr;
}

json Report::to_json() const {
  json rs = json::array();
  for (const auto& r : rows)
    rs.push_back({{"label", r.label},
                  {"target", to_string(r.target)},
                  {"k", r.k},
                  {"method", to_string(r.method)},
                  {"expected", r.expected},
                  {"tolerance", r.tolerance},
                  {"estimate", r.estimated ? json(r.estimate) : json(nullptr)},
                  {"pass", r.pass},
                  {"error", r.error},
                  {"cloud", {{"tag", r.cloud_tag}, {"size", r.cloud_size}, {"resolution", r.resolution}}},
                  {"fit", estimate_json(r.detail)}});
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"command", command}, {"config", config}, {"config_hash", config_hash}, {"rows", rs},
          {"checks", cs},       {"warnings", warnings}, {"pass", all_pass()}};
}

std::string Report::counts_csv() const {
  std::ostringstream out;
  out << "target,method,eps,n,count,saturated\n";
  for (const auto& r : rows)
    for (const auto& f : r.detail.per_eps)
      for (std::size_t i = 0; i < f.counts.size(); ++i) {
        const bool sat = f.ok && i >= f.fit.used;
        out << r.label << ',' << to_string(r.method) << ',' << f.eps << ',' << f.counts[i].n << ','
            << f.counts[i].count << ',' << (sat ? "true" : "false") << '\n';
      }
  return out.str();
}

void Report::write(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  auto put = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << text;
    if (!out) throw Error("write failed for " + (dir / name).string());
  };
  put("report.json", to_json().dump(2) + "\n");
  put("counts.csv", counts_csv());
  put("timing.json", json{{"wall_seconds", wall_seconds}}.dump(2) + "\n");
  if (!words.empty()) {
    std::string text;
    for (const auto& w : words) text += w + "\n";
    put("words.txt", text);
  }
}

Report run(const ExperimentConfig& cfg) {
  return timed("run", cfg, [&](Report& rep) {
    const Homeo1D f = preserving_version(cfg.map.map, &rep.warnings);
    switch (cfg.target) {
      case Target::Base:
        base_rows(f, cfg, cfg.plan, rep);
        break;
      case Target::Continuum:
        continuum_rows(f, cfg, cfg.plan, rep);
        break;
      case Target::SymmetricK:
        symmetric_rows(f, cfg.k, cfg, cfg.plan, cfg.letters, rep);
        break;
      case Target::PowerLowerBounds:
        ladder_rows(f, cfg, rep);
        break;
    }
    if (!cfg.radii.empty() && cfg.method != Method::Separated) {
      const Gap gap = first_gap(f);
      const double m = 0.5 * (gap.lo + gap.hi);
      json values = json::array();
      LocalEntropy loc;
      if (cfg.target == Target::Base) {
        PointSystem sys(f);
        RegionSpec r{RegionKind::Axis, f.space()};
        const auto states = states_of(sys, sample_region(r, cfg.plan.resolution, anchored(cfg.plan, f)).points);
        const HyperPoint c[1] = {FinitePt::singleton(wrap_if(f.space(), m))};
        loc = local_entropy(sys, std::span<const HyperPoint>(c), std::span<const double>(states),
                            std::span<const double>(cfg.radii), std::span<const int>(cfg.plan.n_list));
      } else if (cfg.target == Target::Continuum && f.space() == Space::Interval) {
        IntervalContinuumSystem sys(f);
        RegionSpec r{RegionKind::Triangle, Space::Interval};
        const auto states = states_of(sys, sample_region(r, cfg.plan.resolution, anchored(cfg.plan, f)).points);
        std::vector<HyperPoint> centers;
        for (const auto& L : continuum_letters(f, gap)) centers.push_back(L.center);
        loc = local_entropy(sys, std::span<const HyperPoint>(centers), std::span<const IntervalPt>(states),
                            std::span<const double>(cfg.radii), std::span<const int>(cfg.plan.n_list));
      } else {
        rep.warnings.push_back("local entropy is computed for base and interval continuum targets only");
      }
      if (!loc.radii.empty())
        rep.checks.push_back({"local entropy non-increasing", !loc.non_monotone,
                              {{"radii", loc.radii}, {"values", loc.values}, {"estimate", loc.estimate}}});
    }
  });
}

Report run_singular(const ExperimentConfig& cfg) {
  if (!cfg.singular) throw ConfigError("config.singular", "missing");
  return timed("singular", cfg, [&](Report& rep) {
    const Homeo1D f = preserving_version(cfg.map.map, &rep.warnings);
    const auto& q = *cfg.singular;
    auto body = [&](const auto& sys, const SampleCloud& cloud) {
      using Sys = std::decay_t<decltype(sys)>;
      const auto states = states_of(sys, cloud.points);
      const std::span<const typename Sys::State> view(states);
      Alphabet<Sys> alpha(sys, q.letters);
      const auto v = check_singular(alpha, 0, 1, q.M, view, cfg.verdict_horizon);
      json d = {{"verdict", to_string(v.verdict)}, {"n1", v.n1}, {"n2", v.n2}, {"M", q.M},
                {"horizon", cfg.verdict_horizon}, {"reason", v.reason}};
      if (v.witness) d["witness"] = serialize(*v.witness);
      rep.checks.push_back({"singular", v.verdict != Verdict::Inconclusive, d});
      const auto L = eq2_condition(alpha, 0, 1, view, cfg.horizon);
      rep.checks.push_back({"eq2", true, {{"L", L ? json(*L) : json(nullptr)}, {"horizon", cfg.horizon}}});
    };
    if (f.space() == Space::Interval) {
      IntervalContinuumSystem sys(f);
      body(sys, sample_region({RegionKind::Triangle, Space::Interval}, cfg.plan.resolution, anchored(cfg.plan, f)));
    } else {
      CircleContinuumSystem sys(f);
      body(sys, circle_continuum_cloud(f, cfg.plan));
    }
  });
}

Report reproduce_theorem_a(const ExperimentConfig& cfg) {
  if (cfg.map.map.space() != Space::Interval) throw DomainError("theorem-a needs an interval map");
  return timed("theorem-a", cfg, [&](Report& rep) {
    const Homeo1D f = preserving_version(cfg.map.map, &rep.warnings);
    if (fixed_points(f).size() > 2)
      rep.warnings.push_back("Fix(f) has more than two points; f^{*k} clouds are restricted to the first gap");
    base_rows(f, cfg, plan_for(cfg, Target::Base, 1), rep);
    continuum_rows(f, cfg, plan_for(cfg, Target::Continuum, 1), rep);
    ladder_rows(f, cfg, rep);
  });
}

Report reproduce_theorem_b(const ExperimentConfig& cfg) {
  if (cfg.map.map.space() != Space::Circle) throw DomainError("theorem-b needs a circle map");
  return timed("theorem-b", cfg, [&](Report& rep) {
    const Homeo1D f = preserving_version(cfg.map.map, &rep.warnings);
    const auto fix = require_fixed(f);
    const int which = fix.size() == 1 ? 1 : fix.size() == 2 ? 3 : 2;
    rep.checks.push_back({"case", true, {{"case", which}, {"fixed_points", fix}}});
    base_rows(f, cfg, plan_for(cfg, Target::Base, 1), rep);
    continuum_rows(f, cfg, plan_for(cfg, Target::Continuum, 1), rep);
    ladder_rows(f, cfg, rep);

    CircleContinuumSystem sys(f);
    SamplingPlan plan = plan_for(cfg, Target::Continuum, 1);
    plan.grading.per_decade = std::max(plan.grading.per_decade, 10);
    const auto states = states_of(sys, circle_continuum_cloud(f, plan).points);
    const std::span<const Subarc> view(states);
    auto verdict = [&](const std::string& label, ArcPt c1, ArcPt c2, double r, Verdict expect) {
      Alphabet<CircleContinuumSystem> alpha(sys, {Letter::ball(c1, r, "U1"), Letter::ball(c2, r, "U2")});
      const int M = 50;
      const auto v = check_singular(alpha, 0, 1, M, view, cfg.verdict_horizon);
      json d = {{"verdict", to_string(v.verdict)}, {"expected", to_string(expect)}, {"n1", v.n1}, {"n2", v.n2},
                {"M", M},
                {"horizon", cfg.verdict_horizon}, {"reason", v.reason}, {"U1", serialize(c1)}, {"U2", serialize(c2)}, {"radius", r}};
      if (v.witness) d["witness"] = serialize(*v.witness);
      rep.checks.push_back({label, v.verdict == expect, d});
    };
    if (which == 1) {
      const double a = fix[0];
      verdict("singular pair [a,p],[q,a]", ArcPt{a, wrap01(a + 0.3)}, ArcPt{wrap01(a - 0.2), a}, 0.05,
              Verdict::MutuallySingular);
      verdict("interior arcs", ArcPt{wrap01(a + 0.2), wrap01(a + 0.3)}, ArcPt{wrap01(a + 0.6), wrap01(a + 0.75)},
              0.02, Verdict::NotSingular);
      Alphabet<CircleContinuumSystem> alpha(
          sys, {Letter::ball(ArcPt{a, wrap01(a + 0.3)}, 0.05), Letter::ball(ArcPt{wrap01(a - 0.2), a}, 0.05)});
      const auto L = eq2_condition(alpha, 0, 1, view, cfg.horizon);
      rep.checks.push_back({"eq2 singular pair", L.has_value(),
                            {{"L", L ? json(*L) : json(nullptr)}, {"horizon", cfg.horizon}}});
    } else {
      SamplingPlan coarse = plan;
      coarse.resolution = cfg.resolution_override.value_or(1e-2);
      coarse.grading.per_decade = 20;
      for (std::size_t i = 0; i < fix.size(); ++i)
        for (std::size_t j = 0; j < fix.size(); ++j) {
          RegionSpec r{RegionKind::Dij, Space::Circle};
          r.ci = {fix[i], fix[(i + 1) % fix.size()]};
          r.cj = {fix[j], fix[(j + 1) % fix.size()]};
          auto cloud = sample_region(r, coarse.resolution, anchored(coarse, f));
          ExperimentConfig sep = cfg;
          sep.method = Method::Separated;
          estimate_rows(sys, cloud,
                        {"C(f)|D_" + std::to_string(i) + std::to_string(j), Target::Continuum, 1, 2.0, coarse, {}}, {},
                        sep, rep);
        }
    }
  });
}

}  // namespace polyent
