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

#ifndef NEARHEX_BUILDERS_H_
#define NEARHEX_BUILDERS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "nearhex/geometry.h"
#include "nearhex/gq22.h"

namespace nearhex {

// Near hexagon on the pairs (x, u') with u' in x'^perp, built from two
// copies S, S' of W(2) identified by x <-> x' (identity on edges). For every
// line or complete triad T = {x, y, z} of S, each bijection
// sigma: T -> T'^perp yields the line {(x, sigma x), (y, sigma y), (z, sigma z)}.
// 105 points, 210 lines, points ordered by (x, u). Throws ConsistencyError if
// the construction produces a non-point or an unexpected line count.
Geometry BuildH3();

// Extends the pair geometry by the 15 points of S (indices 105..119) and the
// 15 points of S' (indices 120..134), adding the line {x, (x, u'), u'} for
// every pair point. 135 points, 315 lines. Throws std::invalid_argument when
// h3 is not the output of BuildH3.
Geometry BuildDsp62(const Geometry& h3);

// Pair points of a DSp(6,2) built by BuildDsp62.
PointSet PairPoints(const Geometry& g);

// Perfect matchings of {1..8}; partitions sharing two blocks form a line.
Geometry BuildH3Partitions();

// One line of the fourth type in the ordered-pair model.
struct DeBruynTypeIv {
  // The incomplete line triad {k, m, n} of W(2) and its centre l.
  std::array<int, 3> triad_lines{};
  int centre_line = 0;
  // Meets of k, m, n with l, and the chosen x' on k with its partners.
  std::array<int, 3> on_centre{};
  std::array<int, 3> primed{};
  // Kind of the point triad {x', y', z'} of W(2).
  TriadKind primed_kind = TriadKind::kOther;
  Line line;
};

struct DeBruynModel {
  Geometry geometry;
  // Lines of types (i), (ii), (iii), (iv) after de-duplication.
  std::array<int, 4> type_counts{};
  std::vector<DeBruynTypeIv> type_iv;
};

// Ordered pairs (x, y) of W(2) points with x = y or x ~ y, with lines of
// the four types: diagonal, per flag, the two cyclic orientations of each
// line, and two lines per incomplete line triad. Throws ConsistencyError if
// a partner point on m or n is not unique.
DeBruynModel BuildH3DeBruynDetailed();
Geometry BuildH3DeBruyn();

inline constexpr std::array<std::string_view, 5> kModelNames = {
    "w2", "h3", "h3-partition", "h3-debruyn", "dsp62"};
bool IsModelName(std::string_view name);
// Builds a model by name; throws std::invalid_argument for unknown names.
Geometry BuildModel(std::string_view name);

}  // namespace nearhex

#endif  // NEARHEX_BUILDERS_H_
