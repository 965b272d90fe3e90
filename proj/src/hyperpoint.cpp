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

#include "polyent/hyperpoint.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "polyent/error.hpp"

namespace polyent {

FinitePt::FinitePt(std::span<const double> pts, int k) {
  if (pts.empty()) throw DomainError("FinitePt: empty set");
  if (k < 1 || k > kMaxK) throw DomainError("FinitePt: k must be in [1, 8]");
  std::array<double, kMaxK * 2> buf{};
  if (pts.size() > buf.size()) throw DomainError("FinitePt: too many points");
  std::copy(pts.begin(), pts.end(), buf.begin());
  auto end = buf.begin() + static_cast<std::ptrdiff_t>(pts.size());
  std::sort(buf.begin(), end);
  end = std::unique(buf.begin(), end);
  auto n = static_cast<int>(end - buf.begin());
  if (n > k) throw DomainError("FinitePt: more than k distinct points");
  std::copy(buf.begin(), end, pts_.begin());
  size_ = static_cast<std::uint8_t>(n);
  k_ = static_cast<std::uint8_t>(k);
}

HyperKind kind_of(const HyperPoint& p) noexcept {
  return std::holds_alternative<FinitePt>(p) ? HyperKind::Symmetric : HyperKind::Continuum;
}

double hausdorff(const IntervalPt& a, const IntervalPt& b) noexcept {
  return std::max(std::fabs(a.lo - b.lo), std::fabs(a.hi - b.hi));
}

namespace {

double point_to_arc(double p, const Subarc& b) noexcept {
  if (b.full || arc_contains({b.from, b.to}, p)) return 0.0;
  return std::min(circle_distance(p, b.from), circle_distance(p, b.to));
}

// sup over a in A of d(a, B). The distance to B restricted to the gap of B
// is a tent peaking at the gap midpoint, so the supremum is either half the
// gap (midpoint inside A) or attained at an endpoint of A.
double directed(const Subarc& a, const Subarc& b) noexcept {
  if (b.full) return 0.0;
  const double gap = 1.0 - arc_length({b.from, b.to});
  const double mid = wrap01(b.to + 0.5 * gap);
  if (a.full || arc_contains({a.from, a.to}, mid)) return 0.5 * gap;
  return std::max(point_to_arc(a.from, b), point_to_arc(a.to, b));
}

double directed(Space s, const FinitePt& a, const FinitePt& b) noexcept {
  double worst = 0.0;
  for (double x : a.points()) {
    double best = INFINITY;
    for (double y : b.points()) best = std::min(best, distance(s, x, y));
    worst = std::max(worst, best);
  }
  return worst;
}

[[noreturn]] void mismatch() { throw DomainError("hausdorff: mismatched hyperspace kinds"); }

}  // namespace

double hausdorff(const Subarc& a, const Subarc& b) noexcept {
  return std::max(directed(a, b), directed(b, a));
}

double hausdorff(Space s, const FinitePt& a, const FinitePt& b) noexcept {
  if (s == Space::Interval && a.size() + b.size() > 2) {
    // Sorted sets on a line: each nearest neighbour is found by a merge.
    auto sweep = [](const FinitePt& p, const FinitePt& q) {
      double worst = 0.0;
      int j = 0;
      for (int i = 0; i < p.size(); ++i) {
        while (j + 1 < q.size() && q[j + 1] <= p[i]) ++j;
        double d = std::fabs(p[i] - q[j]);
        if (j + 1 < q.size()) d = std::min(d, std::fabs(q[j + 1] - p[i]));
        worst = std::max(worst, d);
      }
      return worst;
    };
    return std::max(sweep(a, b), sweep(b, a));
  }
  return std::max(directed(s, a, b), directed(s, b, a));
}

double hausdorff(Space s, const HyperPoint& a, const HyperPoint& b) {
  if (kind_of(a) != kind_of(b)) mismatch();
  if (std::holds_alternative<FinitePt>(a))
    return hausdorff(s, std::get<FinitePt>(a), std::get<FinitePt>(b));
  if (s == Space::Interval) {
    if (!std::holds_alternative<IntervalPt>(a) || !std::holds_alternative<IntervalPt>(b))
      mismatch();
    return hausdorff(std::get<IntervalPt>(a), std::get<IntervalPt>(b));
  }
  if (std::holds_alternative<IntervalPt>(a) || std::holds_alternative<IntervalPt>(b))
    mismatch();
  return hausdorff(to_subarc(a), to_subarc(b));
}

bool well_formed(Space s, const HyperPoint& p) noexcept {
  auto in_range = [s](double x) {
    return s == Space::Interval ? (x >= 0.0 && x <= 1.0) : (x >= 0.0 && x < 1.0);
  };
  if (const auto* iv = std::get_if<IntervalPt>(&p))
    return s == Space::Interval && in_range(iv->lo) && in_range(iv->hi) && iv->lo <= iv->hi;
  if (const auto* arc = std::get_if<ArcPt>(&p))
    return s == Space::Circle && in_range(arc->from) && in_range(arc->to);
  if (std::holds_alternative<FullCircle>(p)) return s == Space::Circle;
  const auto& f = std::get<FinitePt>(p);
  if (f.size() < 1 || f.size() > f.k()) return false;
  for (int i = 0; i < f.size(); ++i) {
    if (!in_range(f[i])) return false;
    if (i > 0 && !(f[i - 1] < f[i])) return false;
  }
  return true;
}

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, p);
}

double read_number(std::string_view s, std::string_view whole) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError("", "malformed hyperpoint '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::string serialize(const HyperPoint& p) {
  std::string out;
  if (const auto* iv = std::get_if<IntervalPt>(&p)) {
    out = "I:";
    append_number(out, iv->lo);
    out += ':';
    append_number(out, iv->hi);
  } else if (const auto* arc = std::get_if<ArcPt>(&p)) {
    out = "A:";
    append_number(out, arc->from);
    out += ':';
    append_number(out, arc->to);
  } else if (std::holds_alternative<FullCircle>(p)) {
    out = "S1";
  } else {
    const auto& f = std::get<FinitePt>(p);
    out = "F:";
    for (int i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      append_number(out, f[i]);
    }
  }
  return out;
}

HyperPoint parse_hyperpoint(std::string_view text) {
  if (text == "S1") return FullCircle{};
  if (text.size() < 3 || text[1] != ':')
    throw ConfigError("", "malformed hyperpoint '" + std::string(text) + "'");
  std::string_view body = text.substr(2);
  if (text[0] == 'I' || text[0] == 'A') {
    auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ConfigError("", "malformed hyperpoint '" + std::string(text) + "'");
    double a = read_number(body.substr(0, colon), text);
    double b = read_number(body.substr(colon + 1), text);
    if (text[0] == 'I') return IntervalPt{a, b};
    return ArcPt{a, b};
  }
  if (text[0] == 'F') {
    std::vector<double> pts;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      auto piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - start);
      pts.push_back(read_number(piece, text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    FinitePt tmp(pts, FinitePt::kMaxK);
    return FinitePt::from_sorted(tmp.points().data(), tmp.size(), std::max(tmp.size(), 1));
  }
  throw ConfigError("", "unknown hyperpoint tag in '" + std::string(text) + "'");
}

}  // namespace polyent
