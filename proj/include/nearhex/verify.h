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

#ifndef NEARHEX_VERIFY_H_
#define NEARHEX_VERIFY_H_

#include <set>
#include <string>
#include <vector>

#include "nearhex/geometry.h"

namespace nearhex {

struct NpVerdict {
  bool ok = true;
  long checked_pairs = 0;  // non-incident point-line pairs examined
  // First violating pair in (line, point) order; -1 when ok.
  int witness_point = -1;
  int witness_line = -1;
};
// Near-polygon property: for every point x off a line l, exactly one point
// of l is nearest to x. Throws std::invalid_argument for a disconnected
// geometry.
NpVerdict CheckNp(const Geometry& g);
NpVerdict CheckNp(const Geometry& g, const DistanceMatrix& dm);

struct ParameterSummary {
  int v = 0;
  int line_count = 0;
  std::set<int> line_sizes;
  std::set<int> lines_per_point;
  // |x^perp & y^perp| - 1 over all pairs at distance 2.
  std::set<int> t2_values;
  int diameter = 0;
  bool connected = false;
  // Every pair at distance 2 has at least two common neighbours.
  bool dense = false;
  bool slim = false;
};
ParameterSummary ComputeParameters(const Geometry& g);

enum class QuadKind { kGrid21, kGq22, kOther };
std::string QuadKindName(QuadKind kind);

struct QuadRecord {
  PointSet points;
  QuadKind kind = QuadKind::kOther;
  // Order of the induced geometry when it is a GQ, else -1.
  int s = -1;
  int t = -1;
  std::string witness;  // reason for kOther
};
// Convex closures of all distance-2 pairs with at least two common
// neighbours, de-duplicated and ordered by point set, each classified by the
// order of its induced geometry. Throws std::invalid_argument for a
// disconnected geometry.
std::vector<QuadRecord> EnumerateQuads(const Geometry& g);

}  // namespace nearhex

#endif  // NEARHEX_VERIFY_H_
