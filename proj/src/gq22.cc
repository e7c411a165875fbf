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

#include "nearhex/gq22.h"

#include <algorithm>
#include <sstream>

namespace nearhex {

Geometry BuildW2() {
  std::vector<LabeledPoint> labels;
  for (int i = 0; i < kW2Size; ++i) labels.push_back(EdgeLabel{EdgeAt(i)});
  std::vector<Line> factors;
  for (int i = 0; i < kW2Size; ++i) {
    for (int j = i + 1; j < kW2Size; ++j) {
      if (!Disjoint(EdgeAt(i), EdgeAt(j))) continue;
      for (int k = j + 1; k < kW2Size; ++k) {
        if (Disjoint(EdgeAt(i), EdgeAt(k)) && Disjoint(EdgeAt(j), EdgeAt(k))) {
          factors.push_back({i, j, k});
        }
      }
    }
  }
  return Geometry(kW2Size, std::move(factors), std::move(labels), "w2");
}

GqVerdict IsGq(const Geometry& g) {
  GqVerdict v;
  if (g.point_count() == 0 || g.line_count() == 0) {
    v.witness = "empty geometry";
    return v;
  }
  PlsVerdict pls = ValidatePls(g);
  if (!pls.ok) {
    std::ostringstream os;
    if (!pls.shared_pairs.empty()) {
      os << "points " << g.PointName(pls.shared_pairs[0].first) << " and "
         << g.PointName(pls.shared_pairs[0].second)
         << " share more than one line";
    } else {
      os << "line " << pls.short_lines[0] << " has fewer than two points";
    }
    v.witness = os.str();
    return v;
  }
  const size_t line_size = g.line(0).size();
  for (int l = 0; l < g.line_count(); ++l) {
    if (g.line(l).size() != line_size) {
      v.witness = "line sizes differ (line " + std::to_string(l) + ")";
      return v;
    }
  }
  const size_t pencil = g.lines_through(0).size();
  for (int p = 0; p < g.point_count(); ++p) {
    if (g.lines_through(p).size() != pencil) {
      v.witness = "lines per point differ (point " + g.PointName(p) + ")";
      return v;
    }
  }
  for (int l = 0; l < g.line_count(); ++l) {
    for (int p = 0; p < g.point_count(); ++p) {
      if (g.line_set(l).Contains(p)) continue;
      const int seen = (g.neighbours(p) & g.line_set(l)).Size();
      if (seen != 1) {
        std::ostringstream os;
        os << "point " << g.PointName(p) << " is collinear with " << seen
           << " points of line " << l;
        v.witness = os.str();
        return v;
      }
    }
  }
  v.is_gq = true;
  v.s = static_cast<int>(line_size) - 1;
  v.t = static_cast<int>(pencil) - 1;
  return v;
}

Triad MakeTriad(const Geometry& g, int a, int b, int c) {
  if (a == b || b == c || a == c) {
    throw std::invalid_argument("triad elements must be distinct");
  }
  if (g.Collinear(a, b) || g.Collinear(b, c) || g.Collinear(a, c)) {
    throw std::invalid_argument("triad elements must be pairwise "
                                "non-collinear");
  }
  Triad t;
  t.elements = {a, b, c};
  std::sort(t.elements.begin(), t.elements.end());
  t.perp = Perp(g, PointSet{a, b, c});
  switch (t.perp.Size()) {
    case 3:
      t.kind = TriadKind::kComplete;
      break;
    case 1:
      t.kind = TriadKind::kIncomplete;
      break;
    default:
      t.kind = TriadKind::kOther;
  }
  return t;
}

std::vector<Triad> EnumerateTriads(const Geometry& g, TriadMode mode) {
  if (mode == TriadMode::kLine) {
    std::vector<Triad> triads = EnumerateTriads(DualGeometry(g),
                                                TriadMode::kPoint);
    for (Triad& t : triads) t.mode = TriadMode::kLine;
    return triads;
  }
  std::vector<Triad> out;
  const int n = g.point_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.Collinear(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.Collinear(a, c) || g.Collinear(b, c)) continue;
        out.push_back(MakeTriad(g, a, b, c));
      }
    }
  }
  return out;
}

PointSet IncompleteTriadSubGq(const Geometry& g, const Triad& t) {
  if (t.mode != TriadMode::kPoint) {
    throw std::invalid_argument("grid search needs a point triad");
  }
  if (t.kind != TriadKind::kIncomplete) {
    throw std::invalid_argument("no grid guaranteed for a triad that is not "
                                "incomplete");
  }
  const PointSet triad{t.elements[0], t.elements[1], t.elements[2]};
  // Every other point of a 3x3 grid through a transversal is collinear with
  // exactly two of its points.
  std::vector<int> candidates;
  for (int p = 0; p < g.point_count(); ++p) {
    if (triad.Contains(p)) continue;
    int seen = 0;
    for (int e : t.elements) seen += g.Collinear(p, e) ? 1 : 0;
    if (seen >= 2) candidates.push_back(p);
  }
  constexpr int kNeeded = 6;
  if (candidates.size() > 24) {
    throw std::invalid_argument("grid search space too large");
  }
  std::vector<PointSet> found;
  const int m = static_cast<int>(candidates.size());
  std::vector<int> pick(kNeeded);
  // Standard lexicographic k-combination walk.
  for (int i = 0; i < kNeeded; ++i) pick[i] = i;
  while (m >= kNeeded) {
    PointSet subset = triad;
    for (int i : pick) subset.Insert(candidates[i]);
    GqVerdict v = IsGq(InducedGeometry(g, subset));
    if (v.is_gq && v.s == 2 && v.t == 1) found.push_back(subset);
    int i = kNeeded - 1;
    while (i >= 0 && pick[i] == m - kNeeded + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < kNeeded; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (found.size() != 1) {
    throw ConsistencyError("expected exactly one (2,1)-subGQ through the "
                           "triad, found " + std::to_string(found.size()));
  }
  return found.front();
}

Triad CompleteTriadThrough(const Geometry& g, int x, int y) {
  if (x == y || g.Collinear(x, y)) {
    throw std::invalid_argument("complete triad needs two distinct "
                                "non-collinear points");
  }
  std::vector<Triad> found;
  for (int z = 0; z < g.point_count(); ++z) {
    if (z == x || z == y || g.Collinear(z, x) || g.Collinear(z, y)) continue;
    Triad t = MakeTriad(g, x, y, z);
    if (t.kind == TriadKind::kComplete) found.push_back(t);
  }
  if (found.size() != 1) {
    throw ConsistencyError("expected exactly one complete triad through the "
                           "pair, found " + std::to_string(found.size()));
  }
  return found.front();
}

}  // namespace nearhex
