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

#include "polyent/coordinate.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "polyent/error.hpp"

namespace polyent {
namespace {

bool is_power_of(std::int64_t q, std::int64_t base) {
  if (q <= 0) return false;
  while (q % base == 0) q /= base;
  return q == 1;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError("", "invalid coordinate '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Coordinate Coordinate::parse(std::string_view text) {
  Coordinate c;
  c.source = std::string(text);
  if (text.empty()) throw ConfigError("", "empty coordinate");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    c.num = parse_int(text.substr(0, slash), text);
    c.den = parse_int(text.substr(slash + 1), text);
    if (!is_power_of(c.den, 2) && !is_power_of(c.den, 10))
      throw ConfigError("", "denominator of '" + c.source +
                                "' is not a power of 2 or 10");
  } else {
    bool negative = text.front() == '-';
    std::string_view body = negative || text.front() == '+' ? text.substr(1) : text;
    auto dot = body.find('.');
    std::string digits(body.substr(0, dot));
    std::int64_t den = 1;
    if (dot != std::string_view::npos) {
      auto frac = body.substr(dot + 1);
      if (frac.size() > 17)
        throw ConfigError("", "too many digits in '" + c.source + "'");
      digits += frac;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 18)
      throw ConfigError("", "invalid coordinate '" + c.source + "'");
    c.num = parse_int(digits, text) * (negative ? -1 : 1);
    c.den = den;
  }
  std::int64_t g = std::gcd(c.num, c.den);
  if (g > 1) {
    c.num /= g;
    c.den /= g;
  }
  double parsed = 0.0;
  if (text.find('/') == std::string_view::npos) {
    // Correctly rounded decimal conversion.
    std::from_chars(text.data() + (text.front() == '+'), text.data() + text.size(), parsed);
    c.value = parsed;
  } else {
    c.value = static_cast<double>(c.num) / static_cast<double>(c.den);
  }
  return c;
}

Coordinate Coordinate::from_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  if (ec != std::errc{}) throw ConfigError("", "unrepresentable coordinate");
  std::string_view s(buf, static_cast<std::size_t>(p - buf));
  try {
    return parse(s);
  } catch (const ConfigError&) {
    Coordinate c;
    c.value = v;
    c.source = std::string(s);
    c.num = 0;
    c.den = 0;  // no exact form available
    return c;
  }
}

std::string Coordinate::exact() const {
  if (den == 0) return source;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace polyent
