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

#ifndef NEARHEX_GEOMETRY_JSON_H_
#define NEARHEX_GEOMETRY_JSON_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "nearhex/geometry.h"

namespace nearhex {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interchange document:
//   {"name": ..., "points": [{"id": 0, "label": "12"}, ...],
//    "lines": [[0, 5, 14], ...]}
// Lines come out in canonical order, one per row. Unlabeled geometries omit
// the "label" keys. Output is byte-stable for a given geometry.
std::string GeometryToJson(const Geometry& g);

// Accepts points in any id order as long as the ids are exactly 0..n-1, and
// either every point or no point carries a label. Throws ParseError.
Geometry GeometryFromJson(std::string_view text);

}  // namespace nearhex

#endif  // NEARHEX_GEOMETRY_JSON_H_
