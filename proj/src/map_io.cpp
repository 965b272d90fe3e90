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

#include "polyent/map_io.hpp"

#include <fstream>

#include "polyent/error.hpp"

namespace polyent {
namespace {

Coordinate read_coordinate(const nlohmann::json& v, const std::string& path) {
  try {
    if (v.is_string()) return Coordinate::parse(v.get<std::string>());
    if (v.is_number()) return Coordinate::from_double(v.get<double>());
  } catch (const ConfigError& e) {
    throw ConfigError(path, e.what());
  }
  throw ConfigError(path, "expected a number or a decimal string");
}

}  // namespace

MapDocument parse_map(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  Space space;
  auto s = j.value("space", std::string{});
  if (s == "interval") space = Space::Interval;
  else if (s == "circle") space = Space::Circle;
  else throw ConfigError(path + ".space", "must be \"interval\" or \"circle\"");

  Orientation orientation = Orientation::Preserving;
  if (j.contains("orientation")) {
    auto o = j.at("orientation");
    if (o == "preserving") orientation = Orientation::Preserving;
    else if (o == "reversing") orientation = Orientation::Reversing;
    else throw ConfigError(path + ".orientation", "must be \"preserving\" or \"reversing\"");
  }

  if (!j.contains("breakpoints") || !j.at("breakpoints").is_array())
    throw ConfigError(path + ".breakpoints", "expected an array of [x, y] pairs");
  MapDocument doc{Homeo1D::identity(space), {}};
  std::vector<Breakpoint> bps;
  const auto& arr = j.at("breakpoints");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = path + ".breakpoints[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw ConfigError(p, "expected [x, y]");
    auto x = read_coordinate(arr[i][0], p + "[0]");
    auto y = read_coordinate(arr[i][1], p + "[1]");
    bps.push_back({x.value, y.value});
    doc.source.emplace_back(std::move(x), std::move(y));
  }
  doc.map = Homeo1D(space, orientation, std::move(bps));
  return doc;
}

MapDocument load_map(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string(), "cannot open");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(file.string(), e.what());
  }
  return parse_map(j, "map");
}

nlohmann::json to_json(const MapDocument& doc) {
  nlohmann::json j = to_json(doc.map);
  auto& arr = j["breakpoints"];
  arr = nlohmann::json::array();
  for (const auto& [x, y] : doc.source) arr.push_back({x.source, y.source});
  return j;
}

nlohmann::json to_json(const Homeo1D& f) {
  nlohmann::json j;
  j["space"] = std::string(to_string(f.space()));
  j["orientation"] = f.orientation() == Orientation::Preserving ? "preserving" : "reversing";
  auto arr = nlohmann::json::array();
  for (const auto& b : f.breakpoints()) arr.push_back({b.x, b.y});
  j["breakpoints"] = std::move(arr);
  return j;
}

}  // namespace polyent
