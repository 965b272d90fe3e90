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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyent/coordinate.hpp"
#include "polyent/homeo.hpp"

namespace polyent {

/// A map as read from its JSON description, with the exact source
/// coordinates kept for reporting.
///
///   { "space": "interval" | "circle",
///     "orientation": "preserving" | "reversing",
///     "breakpoints": [[x, y], ...] }
///
/// Coordinates may be JSON strings ("0.25", "1/4") or numbers.
struct MapDocument {
  Homeo1D map;
  std::vector<std::pair<Coordinate, Coordinate>> source;
};

/// Parses a map object; `path` prefixes error messages (e.g. "map").
MapDocument parse_map(const nlohmann::json& j, const std::string& path = "map");
MapDocument load_map(const std::filesystem::path& file);
nlohmann::json to_json(const MapDocument& doc);
nlohmann::json to_json(const Homeo1D& f);

}  // namespace polyent
