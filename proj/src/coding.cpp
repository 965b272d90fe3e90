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

#include "polyent/coding.hpp"

#include <fstream>

namespace polyent {

std::string to_string(LetterKind k) {
  switch (k) {
    case LetterKind::HalfOpen: return "half_open";
    case LetterKind::Ball: return "ball";
    case LetterKind::BandHit: return "band_hit";
  }
  return "?";
}

LetterKind parse_letter_kind(std::string_view s) {
  if (s == "half_open") return LetterKind::HalfOpen;
  if (s == "ball") return LetterKind::Ball;
  if (s == "band_hit") return LetterKind::BandHit;
  throw DomainError("unknown letter kind '" + std::string(s) + "'");
}

Letter Letter::half_open(double lo, double hi, std::string name) {
  Letter L;
  L.kind = LetterKind::HalfOpen;
  L.lo = lo;
  L.hi = hi;
  L.name = std::move(name);
  return L;
}

Letter Letter::ball(HyperPoint center, double radius, std::string name) {
  Letter L;
  L.kind = LetterKind::Ball;
  L.center = std::move(center);
  L.radius = radius;
  L.name = std::move(name);
  return L;
}

Letter Letter::band_hit(double lo, double hi, std::string name) {
  Letter L = half_open(lo, hi, std::move(name));
  L.kind = LetterKind::BandHit;
  return L;
}

std::string CodingWord::render(std::span<const std::string> names) const {
  std::string out;
  std::size_t next = 0;
  for (int t = 0; t < length; ++t) {
    if (t > 0) out += ',';
    if (next < hits.size() && hits[next].first == t) {
      out += names[static_cast<std::size_t>(hits[next].second)];
      ++next;
    } else {
      out += '-';
    }
  }
  return out;
}

std::size_t CodingWordHash::operator()(const CodingWord& w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(w.length);
  for (const auto& [t, j] : w.hits) {
    h ^= (static_cast<std::uint64_t>(t) << 16 | static_cast<std::uint64_t>(j)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::MutuallySingular: return "MutuallySingular";
    case Verdict::NotSingular: return "NotSingular";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::int64_t quadratic_word_bound(int n, int L) {
  std::int64_t total = 0;
  for (std::int64_t m = 0; m <= static_cast<std::int64_t>(n) - L - 1; ++m) total += n - L - m;
  return total;
}

void write_words(const std::filesystem::path& file, std::span<const CodingWord> words,
                 std::span<const std::string> names) {
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  for (const auto& w : words) out << w.render(names) << '\n';
  if (!out) throw Error("write failed for " + file.string());
}

}  // namespace polyent
