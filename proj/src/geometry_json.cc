// Copyright 2026 The nearhex Authors
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

#include "nearhex/geometry_json.h"

#include <sstream>

#include "json.hpp"

namespace nearhex {

using nlohmann::json;

std::string GeometryToJson(const Geometry& g) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(g.name()).dump() << ",\n  \"points\": [";
  for (int p = 0; p < g.point_count(); ++p) {
    os << (p == 0 ? "\n" : ",\n") << "    {\"id\": " << p;
    if (g.has_labels()) {
      os << ", \"label\": " << json(RenderLabel(g.label(p))).dump();
    }
    os << "}";
  }
  os << (g.point_count() > 0 ? "\n  ],\n" : "],\n") << "  \"lines\": [";
  for (int l = 0; l < g.line_count(); ++l) {
    os << (l == 0 ? "\n" : ",\n") << "    [";
    const Line& line = g.line(l);
    for (size_t i = 0; i < line.size(); ++i) {
      os << (i == 0 ? "" : ", ") << line[i];
    }
    os << "]";
  }
  os << (g.line_count() > 0 ? "\n  ]\n" : "]\n") << "}\n";
  return os.str();
}

Geometry GeometryFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw ParseError("missing \"points\" array");
  }
  if (!doc.contains("lines") || !doc["lines"].is_array()) {
    throw ParseError("missing \"lines\" array");
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  const json& points = doc["points"];
  const int n = static_cast<int>(points.size());
  if (n > kMaxPoints) throw ParseError("too many points");
  std::vector<std::optional<LabeledPoint>> labels(n);
  std::vector<bool> seen(n, false);
  int labelled = 0;
  for (const json& p : points) {
    if (!p.is_object() || !p.contains("id") || !p["id"].is_number_integer()) {
      throw ParseError("every point needs an integer \"id\"");
    }
    const long id = p["id"].get<long>();
    if (id < 0 || id >= n || seen[id]) {
      throw ParseError("point ids must be exactly 0.." + std::to_string(n - 1));
    }
    seen[id] = true;
    if (p.contains("label")) {
      if (!p["label"].is_string()) throw ParseError("labels must be strings");
      const std::string text_label = p["label"].get<std::string>();
      labels[id] = ParseLabel(text_label);
      if (!labels[id]) throw ParseError("unrecognised label \"" + text_label +
                                        "\"");
      ++labelled;
    }
  }
  if (labelled != 0 && labelled != n) {
    throw ParseError("either all points or none must carry labels");
  }

  std::vector<Line> lines;
  for (const json& l : doc["lines"]) {
    if (!l.is_array()) throw ParseError("each line must be an array");
    Line line;
    for (const json& p : l) {
      if (!p.is_number_integer()) throw ParseError("line entries must be ints");
      line.push_back(p.get<int>());
    }
    lines.push_back(std::move(line));
  }
  std::vector<LabeledPoint> label_table;
  if (labelled == n) {
    for (auto& l : labels) label_table.push_back(*l);
  }
  try {
    return Geometry(n, std::move(lines), std::move(label_table),
                    std::move(name));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid geometry: ") + e.what());
  }
}

}  // namespace nearhex
