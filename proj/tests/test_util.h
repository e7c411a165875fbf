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

#ifndef NEARHEX_TESTS_TEST_UTIL_H_
#define NEARHEX_TESTS_TEST_UTIL_H_

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "nearhex/geometry.h"

namespace nearhex::testing {

// Point index of a rendered label, throws if absent.
inline int Pt(const Geometry& g, const std::string& text) {
  auto label = ParseLabel(text);
  if (!label) throw std::invalid_argument("bad label " + text);
  auto p = g.FindPoint(*label);
  if (!p) throw std::invalid_argument("no point " + text);
  return *p;
}

inline PointSet Pts(const Geometry& g,
                    std::initializer_list<std::string> texts) {
  PointSet s;
  for (const auto& t : texts) s.Insert(Pt(g, t));
  return s;
}

inline bool HasLine(const Geometry& g, const PointSet& s) {
  for (int i = 0; i < g.line_count(); ++i) {
    if (g.line_set(i) == s) return true;
  }
  return false;
}

// 3x3 grid on points 0..8, rows and columns.
inline Geometry Grid33() {
  return Geometry(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8},
                      {0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
                  {}, "grid");
}

}  // namespace nearhex::testing

#endif  // NEARHEX_TESTS_TEST_UTIL_H_
