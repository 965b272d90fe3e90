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

#include <cstdint>
#include <string>
#include <string_view>

namespace polyent {

/// A coordinate read from text. The exact rational value is retained for
/// reporting; arithmetic uses `value`.
///
/// Accepted forms: decimal ("0.25", "-1.5e-3" is rejected), and fractions
/// "p/q" whose denominator is a power of 2 or of 10.
struct Coordinate {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value = 0.0;
  std::string source;

  static Coordinate parse(std::string_view text);
  static Coordinate from_double(double v);

  /// Reduced "p/q" (or "p" when q == 1).
  std::string exact() const;
};

}  // namespace polyent
