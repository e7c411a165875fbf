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

#ifndef NEARHEX_CASE_ANALYSIS_H_
#define NEARHEX_CASE_ANALYSIS_H_

#include <map>
#include <string>
#include <vector>

#include "nearhex/geometry.h"

namespace nearhex {

// Outcome of one exhaustive scan. Pairs are assigned to cases from their
// labels only; the histograms record what the geometry actually shows.
struct CaseReport {
  std::string id;
  std::string expectation;
  long count = 0;
  std::map<int, long> common_neighbours;  // histogram over the case's pairs
  std::map<int, long> distances;
  // Sorted distance triples from an external point to a line ("122", ...).
  std::map<std::string, long> patterns;
  bool ok = true;
  std::vector<std::string> witnesses;  // sorted, at most kMaxWitnesses
};

inline constexpr int kMaxWitnesses = 10;

// Pair cases of the 105-point pair geometry. For alpha = (x, u') and
// beta = (y, v') not collinear:
//   A1  x = y, u' != v'
//   A2  x != y, u' = v'
//   A3  x != y, u' != v', u' not in y'^perp, v' not in x'^perp
//   A4  x != y, u' != v', exactly one of u' in y'^perp, v' in x'^perp
// A1 and A2 must have exactly two common neighbours, A3 exactly three, A4
// must be at distance 3. Also reports the "collinear" pairs (label rule
// agrees with the lines) and the two line-distance implications
// ("line-dist2", "line-dist3") over every line and external point.
// Throws std::invalid_argument when a point is not pair-labelled.
std::vector<CaseReport> H3CaseAnalysis(const Geometry& g);

// Pair cases of DSp(6,2) touching P or P':
//   B1  x, y in P          B2  u', v' in P'
//   B3  x in P, u' in P', u' not in x'^perp
//   B4  x, (y, v') with x != y, v' in x'^perp
//   B5  u', (y, v') with u' != v', y in u^perp
//   B6  x, (y, v') with x != y, v' not in x'^perp
//   B7  u', (y, v') with u' != v', y not in u^perp
// B1, B2, B4, B5 need at least three common neighbours, B3, B6, B7 distance
// 3. Pairs inside the pair points are re-run through the A cases
// ("inner-A1".."inner-A4"; exactly three common neighbours for A1-A3 and
// distance 3 for A4 once P and P' are present). Line checks cover the
// lines through P and P' ("l1-nearest") and the pair lines seen from P and
// P' ("pair-line-dist2", "pair-line-dist3").
std::vector<CaseReport> DspCaseAnalysis(const Geometry& g,
                                        const PointSet& h3_points);

}  // namespace nearhex

#endif  // NEARHEX_CASE_ANALYSIS_H_
