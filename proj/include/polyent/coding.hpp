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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polyent/estimate.hpp"
#include "polyent/systems.hpp"

namespace polyent {

enum class LetterKind {
  HalfOpen,  ///< points x with lo < x <= hi (wrapping on the circle when lo > hi)
  Ball,      ///< states at distance < radius from center
  BandHit    ///< sets meeting (lo, hi]
};

std::string to_string(LetterKind k);
LetterKind parse_letter_kind(std::string_view s);

struct Letter {
  LetterKind kind = LetterKind::HalfOpen;
  double lo = 0.0;
  double hi = 0.0;
  HyperPoint center{};
  double radius = 0.0;
  std::string name;

  static Letter half_open(double lo, double hi, std::string name = {});
  static Letter ball(HyperPoint center, double radius, std::string name = {});
  static Letter band_hit(double lo, double hi, std::string name = {});
};

/// Sparse coding word: the (time, letter) pairs where the orbit is not in
/// Y_infinity. Letters are 0-based indices into the alphabet.
struct CodingWord {
  int length = 0;
  std::vector<std::pair<int, int>> hits;

  bool operator==(const CodingWord&) const = default;
  /// Comma-separated letters, "-" for the infinity letter.
  std::string render(std::span<const std::string> names) const;
};

struct CodingWordHash {
  std::size_t operator()(const CodingWord& w) const noexcept;
};

namespace detail {

inline bool half_open_contains(double lo, double hi, double x) noexcept {
  if (lo <= hi) return lo < x && x <= hi;
  return x > lo || x <= hi;
}

}  // namespace detail

/// A letter family bound to one system. Construction rejects letters that
/// contain a fixed state of the system.
template <DynamicalSystem S>
class Alphabet {
 public:
  using State = typename S::State;

  Alphabet(const S& sys, std::vector<Letter> letters) : sys_(sys), letters_(std::move(letters)) {
    for (std::size_t j = 0; j < letters_.size(); ++j) {
      auto& L = letters_[j];
      if (L.name.empty()) L.name = std::to_string(j + 1);
      names_.push_back(L.name);
      if (L.kind == LetterKind::Ball) {
        if (!(L.radius > 0.0)) throw DomainError("letter " + L.name + ": radius must be positive");
        centers_.push_back(sys_.from_hyperpoint(L.center));
      } else {
        if (!(L.lo < L.hi) && !(sys_.space() == Space::Circle && L.lo != L.hi))
          throw DomainError("letter " + L.name + ": need lo < hi");
        if (L.kind == LetterKind::HalfOpen && !std::is_same_v<State, double>)
          throw DomainError("letter " + L.name + ": half-open letters apply to point systems only");
        centers_.push_back(State{});
      }
    }
    for (const auto& fx : sys_.fixed_states())
      for (std::size_t j = 0; j < letters_.size(); ++j)
        if (in_letter(j, fx))
          throw DomainError("letter " + letters_[j].name + " contains a fixed state");
  }

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const S& system() const noexcept { return sys_; }

  bool in_letter(std::size_t j, const State& s) const {
    const auto& L = letters_[j];
    switch (L.kind) {
      case LetterKind::Ball:
        return sys_.distance(s, centers_[j]) < L.radius;
      case LetterKind::HalfOpen:
      case LetterKind::BandHit:
        return band_hit(L.lo, L.hi, s);
    }
    return false;
  }

  /// Index of the letter holding s, or -1 for Y_infinity. Throws DomainError
  /// when s lies in two letters.
  int letter_of(const State& s) const {
    int found = -1;
    for (std::size_t j = 0; j < letters_.size(); ++j) {
      if (!in_letter(j, s)) continue;
      if (found >= 0)
        throw DomainError("overlapping letters " + letters_[static_cast<std::size_t>(found)].name + " and " +
                          letters_[j].name);
      found = static_cast<int>(j);
    }
    return found;
  }

 private:
  bool band_hit(double lo, double hi, const State& s) const {
    if constexpr (std::is_same_v<State, double>) {
      return detail::half_open_contains(lo, hi, s);
    } else if constexpr (std::is_same_v<State, FinitePt>) {
      for (double x : s.points())
        if (detail::half_open_contains(lo, hi, x)) return true;
      return false;
    } else if constexpr (std::is_same_v<State, IntervalPt>) {
      return s.hi > lo && s.lo <= hi;
    } else {
      throw DomainError("band letters are not defined for this system");
    }
  }

  const S& sys_;
  std::vector<Letter> letters_;
  std::vector<std::string> names_;
  std::vector<State> centers_;
};

template <DynamicalSystem S>
CodingWord code_orbit(const Alphabet<S>& alpha, typename S::State x, int n) {
  if (n < 0) throw DomainError("code_orbit: n must be >= 0");
  CodingWord w;
  w.length = n;
  for (int t = 0; t < n; ++t) {
    if (t > 0) x = alpha.system().step(x);
    const int j = alpha.letter_of(x);
    if (j >= 0) w.hits.emplace_back(t, j);
  }
  return w;
}

/// Distinct words of each length in n_list over all cloud starting points.
struct WordTable {
  std::vector<int> n_list;
  std::vector<std::size_t> counts;
  /// Filled only when requested; words[i] are the words of length n_list[i].
  std::vector<std::vector<CodingWord>> words;
};

template <DynamicalSystem S>
WordTable word_counts(const Alphabet<S>& alpha, std::span<const typename S::State> cloud,
                      std::span<const int> n_list, bool parallel = true, bool keep_words = false) {
  if (!std::is_sorted(n_list.begin(), n_list.end()) || (!n_list.empty() && n_list.front() < 0))
    throw DomainError("word_counts: n_list must be increasing and non-negative");
  using Set = std::unordered_set<CodingWord, CodingWordHash>;
  const std::size_t m = n_list.size();
  const int n_max = m ? n_list.back() : 0;
  std::vector<Set> merged(m);
  const auto size = static_cast<std::ptrdiff_t>(cloud.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel if (parallel)
  {
    std::vector<Set> local(m);
#pragma omp for schedule(dynamic, 256) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      try {
        const CodingWord full = code_orbit(alpha, cloud[static_cast<std::size_t>(i)], n_max);
        for (std::size_t k = 0; k < m; ++k) {
          CodingWord w;
          w.length = n_list[k];
          for (const auto& h : full.hits)
            if (h.first < n_list[k]) w.hits.push_back(h);
          local[k].insert(std::move(w));
        }
      } catch (const Error& e) {
#pragma omp critical(polyent_words_error)
        {
          failed = true;
          failure = e.what();
        }
      }
    }
#pragma omp critical(polyent_words_merge)
    for (std::size_t k = 0; k < m; ++k) merged[k].merge(local[k]);
  }
  if (failed) throw DomainError(failure);
  WordTable out;
  out.n_list.assign(n_list.begin(), n_list.end());
  for (std::size_t k = 0; k < m; ++k) {
    out.counts.push_back(cloud.empty() ? 0 : merged[k].size());
    if (keep_words) {
      std::vector<CodingWord> ws(merged[k].begin(), merged[k].end());
      std::sort(ws.begin(), ws.end(), [](const CodingWord& a, const CodingWord& b) { return a.hits < b.hits; });
      out.words.push_back(std::move(ws));
    }
  }
  return out;
}

template <DynamicalSystem S>
std::size_t word_count(const Alphabet<S>& alpha, std::span<const typename S::State> cloud, int n,
                       bool parallel = true) {
  const int ns[1] = {n};
  return word_counts(alpha, cloud, std::span<const int>(ns), parallel).counts.front();
}

/// Serial word counting with dense words, kept as a reference for tests.
template <DynamicalSystem S>
std::size_t word_count_reference(const Alphabet<S>& alpha, std::span<const typename S::State> cloud, int n) {
  std::vector<std::vector<int>> words;
  for (const auto& x0 : cloud) {
    std::vector<int> w;
    auto x = x0;
    for (int t = 0; t < n; ++t) {
      if (t > 0) x = alpha.system().step(x);
      w.push_back(alpha.letter_of(x));
    }
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  return static_cast<std::size_t>(std::unique(words.begin(), words.end()) - words.begin());
}

/// Growth of the word count. The single per_eps entry carries eps = 0.
template <DynamicalSystem S>
EntropyEstimate relative_entropy(const Alphabet<S>& alpha, std::span<const typename S::State> cloud,
                                 std::span<const int> n_list, bool parallel = true) {
  const auto table = word_counts(alpha, cloud, n_list, parallel);
  std::vector<SeparatedCount> counts;
  for (std::size_t i = 0; i < n_list.size(); ++i) counts.push_back({n_list[i], 0.0, table.counts[i], {}});
  EntropyEstimate est;
  est.n_min = n_list.empty() ? 0 : n_list.front();
  est.n_max = n_list.empty() ? 0 : n_list.back();
  est.per_eps.push_back(fit_counts(0.0, std::move(counts)));
  finalize_estimate(est, 0.0);
  return est;
}

struct VisitBound {
  int max_visits = 0;
  /// Some orbit hit the region at t = +-horizon; the bound may undercount.
  bool at_horizon = false;
};

/// M(Z) over the cloud, counting hit times t in [-horizon, horizon].
template <DynamicalSystem S>
VisitBound max_visits(const Alphabet<S>& alpha, std::size_t letter, std::span<const typename S::State> cloud,
                      int horizon) {
  if (letter >= alpha.size()) throw DomainError("max_visits: letter index out of range");
  VisitBound vb;
  const auto& sys = alpha.system();
  for (const auto& x0 : cloud) {
    int hits = alpha.in_letter(letter, x0) ? 1 : 0;
    auto fwd = x0, bwd = x0;
    for (int t = 1; t <= horizon; ++t) {
      fwd = sys.step(fwd);
      bwd = sys.unstep(bwd);
      const bool hf = alpha.in_letter(letter, fwd), hb = alpha.in_letter(letter, bwd);
      hits += hf + hb;
      if (t == horizon && (hf || hb)) vb.at_horizon = true;
    }
    vb.max_visits = std::max(vb.max_visits, hits);
  }
  return vb;
}

enum class Verdict { MutuallySingular, NotSingular, Inconclusive };
std::string to_string(Verdict v);

struct SingularityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  /// MutuallySingular: f^{n1}(witness) is in U1 and f^{n2}(witness) in U2.
  std::optional<HyperPoint> witness;
  int n1 = 0;
  int n2 = 0;
  std::string reason;
};

namespace detail {

/// Endpoints of an interval or arc state, and the state rebuilt from them.
template <class State>
constexpr bool kHasEndpoints = std::is_same_v<State, IntervalPt> || std::is_same_v<State, Subarc>;

template <class State>
std::array<double, 2> endpoints(const State& s) {
  if constexpr (std::is_same_v<State, IntervalPt>) return {s.lo, s.hi};
  else return {s.from, s.to};
}

template <class State>
State from_endpoints(double a, double b) {
  if constexpr (std::is_same_v<State, IntervalPt>) return IntervalPt{std::min(a, b), std::max(a, b)};
  else return Subarc{a, b, false};
}

}  // namespace detail

/// Looks for x and times n1, n2 >= 1 with f^{n1}(x) in U1, f^{n2}(x) in U2
/// and |n1 - n2| > M. Ball letters around intervals or arcs first try the
/// construction that keeps one endpoint of the U1 center and pulls back the
/// other from the U2 center; then the cloud orbits over [-horizon, horizon]
/// are scanned.
template <DynamicalSystem S>
SingularityVerdict check_singular(const Alphabet<S>& alpha, std::size_t u1, std::size_t u2, int M,
                                  std::span<const typename S::State> cloud, int horizon) {
  using State = typename S::State;
  const auto& sys = alpha.system();
  if (u1 >= alpha.size() || u2 >= alpha.size()) throw DomainError("check_singular: letter index out of range");
  if (M < 0 || horizon < 1) throw DomainError("check_singular: need M >= 0 and horizon >= 1");

  auto found = [&](State w, int n1, int n2, std::string how) {
    // shift so both times are >= 1
    const int shift = 1 - std::min(n1, n2);
    for (int i = 0; i < shift; ++i) w = sys.unstep(w);
    for (int i = 0; i > shift; --i) w = sys.step(w);
    SingularityVerdict v;
    v.verdict = Verdict::MutuallySingular;
    v.witness = sys.to_hyperpoint(w);
    v.n1 = n1 + shift;
    v.n2 = n2 + shift;
    v.reason = std::move(how);
    return v;
  };

  if constexpr (detail::kHasEndpoints<State>) {
    const auto& L1 = alpha.letters()[u1];
    const auto& L2 = alpha.letters()[u2];
    if (L1.kind == LetterKind::Ball && L2.kind == LetterKind::Ball) {
      const State c1 = sys.from_hyperpoint(L1.center), c2 = sys.from_hyperpoint(L2.center);
      bool usable = true;
      if constexpr (std::is_same_v<State, Subarc>) usable = !c1.full && !c2.full;
      if (usable) {
        const auto e1 = detail::endpoints(c1), e2 = detail::endpoints(c2);
        for (int order = 0; order < 2; ++order) {
          const auto& a = order == 0 ? e1 : e2;  // held at time 0
          const auto& b = order == 0 ? e2 : e1;  // reached at time N
          const std::size_t ua = order == 0 ? u1 : u2, ub = order == 0 ? u2 : u1;
          std::array<double, 2> pulled = b;
          for (int N = 1; N <= horizon; ++N) {
            for (auto& p : pulled) p = sys.inverse()(p);
            if (N <= M) continue;
            for (int mask = 1; mask < 3; ++mask) {
              const double from = (mask & 1) ? pulled[0] : a[0];
              const double to = (mask & 2) ? pulled[1] : a[1];
              const State w = detail::from_endpoints<State>(from, to);
              if (!alpha.in_letter(ua, w)) continue;
              State img = w;
              for (int t = 0; t < N; ++t) img = sys.step(img);
              if (!alpha.in_letter(ub, img)) continue;
              return order == 0 ? found(w, 0, N, "constructed") : found(w, N, 0, "constructed");
            }
          }
        }
      }
    }
  }

  bool settled = true;
  int widest = -1;
  for (const auto& x0 : cloud) {
    std::vector<int> t1, t2;
    State s = x0;
    for (int i = 0; i < horizon; ++i) s = sys.unstep(s);
    const State start = s;
    for (int t = -horizon; t <= horizon; ++t) {
      if (t > -horizon) s = sys.step(s);
      const bool h1 = alpha.in_letter(u1, s), h2 = alpha.in_letter(u2, s);
      if (h1) t1.push_back(t);
      if (h2) t2.push_back(t);
      if ((h1 || h2) && (t == -horizon || t == horizon)) settled = false;
    }
    if (t1.empty() || t2.empty()) continue;
    // the widest gap pairs an extreme of one list with an extreme of the other
    const std::array<std::pair<int, int>, 2> cand{{{t1.front(), t2.back()}, {t1.back(), t2.front()}}};
    for (auto [a, b] : cand) {
      widest = std::max(widest, std::abs(a - b));
      if (std::abs(a - b) > M) {
        State w = start;
        for (int t = -horizon; t < 0; ++t) w = sys.step(w);
        return found(w, a, b, "cloud scan");
      }
    }
  }
  SingularityVerdict v;
  if (!settled) {
    v.verdict = Verdict::Inconclusive;
    v.reason = "orbits still visit the regions at horizon " + std::to_string(horizon);
  } else {
    v.verdict = Verdict::NotSingular;
    v.reason = widest < 0 ? "no sampled orbit visits both regions"
                          : "largest time gap " + std::to_string(widest) + " <= M";
  }
  return v;
}

/// Smallest L <= horizon such that every n in [L, horizon] has a cloud
/// point x in Y1 with f^n(x) in Y2.
template <DynamicalSystem S>
std::optional<int> eq2_condition(const Alphabet<S>& alpha, std::size_t y1, std::size_t y2,
                                 std::span<const typename S::State> cloud, int horizon, bool parallel = true) {
  if (y1 >= alpha.size() || y2 >= alpha.size()) throw DomainError("eq2_condition: letter index out of range");
  if (horizon < 1) throw DomainError("eq2_condition: horizon must be >= 1");
  std::vector<char> realized(static_cast<std::size_t>(horizon) + 1, 0);
  const auto size = static_cast<std::ptrdiff_t>(cloud.size());
#pragma omp parallel if (parallel)
  {
    std::vector<char> local(realized.size(), 0);
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      auto s = cloud[static_cast<std::size_t>(i)];
      if (!alpha.in_letter(y1, s)) continue;
      for (int n = 1; n <= horizon; ++n) {
        s = alpha.system().step(s);
        if (alpha.in_letter(y2, s)) local[static_cast<std::size_t>(n)] = 1;
      }
    }
#pragma omp critical(polyent_eq2_merge)
    for (std::size_t n = 0; n < realized.size(); ++n) realized[n] |= local[n];
  }
  if (!realized[static_cast<std::size_t>(horizon)]) return std::nullopt;
  int L = horizon;
  while (L > 1 && realized[static_cast<std::size_t>(L - 1)]) --L;
  return L;
}

/// sum_{m=0}^{n-L-1} (n - L - m), the lower bound on word counts implied by
/// an eq2 threshold L.
std::int64_t quadratic_word_bound(int n, int L);

struct LocalEntropy {
  std::vector<double> radii;
  std::vector<double> values;
  /// The sequence rose by more than the tolerance somewhere.
  bool non_monotone = false;
  double estimate = 0.0;
};

/// Relative entropy of ball families around `centers` for each radius.
template <DynamicalSystem S>
LocalEntropy local_entropy(const S& sys, std::span<const HyperPoint> centers, std::span<const typename S::State> cloud,
                           std::span<const double> radii, std::span<const int> n_list, double tolerance = 0.1) {
  LocalEntropy out;
  for (double r : radii) {
    out.radii.push_back(r);
    if (centers.empty()) {
      out.values.push_back(0.0);
      continue;
    }
    std::vector<Letter> letters;
    for (const auto& c : centers) letters.push_back(Letter::ball(c, r));
    Alphabet<S> alpha(sys, std::move(letters));
    out.values.push_back(relative_entropy(alpha, cloud, n_list).value);
  }
  for (std::size_t i = 1; i < out.values.size(); ++i)
    if (out.values[i] > out.values[i - 1] + tolerance) out.non_monotone = true;
  if (!out.values.empty()) out.estimate = out.values.back();
  return out;
}

/// One word per line, letters comma-separated, "-" for Y_infinity.
void write_words(const std::filesystem::path& file, std::span<const CodingWord> words,
                 std::span<const std::string> names);

}  // namespace polyent
