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

#include "nearhex/verify.h"

#include <algorithm>
#include <set>

#include "nearhex/gq22.h"

namespace nearhex {

NpVerdict CheckNp(const Geometry& g, const DistanceMatrix& dm) {
  if (!dm.connected()) {
    throw std::invalid_argument("near-polygon check needs a connected "
                                "geometry");
  }
  NpVerdict v;
  for (int l = 0; l < g.line_count(); ++l) {
    const Line& line = g.line(l);
    for (int x = 0; x < g.point_count(); ++x) {
      if (g.line_set(l).Contains(x)) continue;
      ++v.checked_pairs;
      int best = kUnreachable;
      int attained = 0;
      for (int p : line) {
        const int d = dm(x, p);
        if (d < best) {
          best = d;
          attained = 1;
        } else if (d == best) {
          ++attained;
        }
      }
      if (attained != 1 && v.ok) {
        v.ok = false;
        v.witness_point = x;
        v.witness_line = l;
      }
    }
  }
  return v;
}

NpVerdict CheckNp(const Geometry& g) { return CheckNp(g, DistanceMatrix(g)); }

ParameterSummary ComputeParameters(const Geometry& g) {
  ParameterSummary s;
  s.v = g.point_count();
  s.line_count = g.line_count();
  for (const Line& l : g.lines()) s.line_sizes.insert(static_cast<int>(l.size()));
  for (int p = 0; p < g.point_count(); ++p) {
    s.lines_per_point.insert(static_cast<int>(g.lines_through(p).size()));
  }
  s.slim = s.line_sizes == std::set<int>{3};
  const DistanceMatrix dm(g);
  s.connected = dm.connected();
  s.diameter = dm.diameter();
  s.dense = true;
  for (int a = 0; a < g.point_count(); ++a) {
    dm.Sphere(a, 2).ForEach([&](int b) {
      if (b <= a) return;
      const int common = (g.neighbours(a) & g.neighbours(b)).Size();
      s.t2_values.insert(common - 1);
      if (common < 2) s.dense = false;
    });
  }
  return s;
}

std::string QuadKindName(QuadKind kind) {
  switch (kind) {
    case QuadKind::kGrid21:
      return "grid21";
    case QuadKind::kGq22:
      return "gq22";
    case QuadKind::kOther:
      break;
  }
  return "other";
}

namespace {

QuadRecord Classify(const Geometry& g, const DistanceMatrix& dm,
                    const PointSet& points) {
  QuadRecord q;
  q.points = points;
  const std::vector<int> members = points.ToVector();
  for (int a : members) {
    for (int b : members) {
      if (dm(a, b) > 2) {
        q.witness = "diameter exceeds 2 between " + g.PointName(a) + " and " +
                    g.PointName(b);
        return q;
      }
    }
    if ((points - PointSet{a}).IsSubsetOf(g.neighbours(a))) {
      q.witness = "point " + g.PointName(a) + " is adjacent to all others";
      return q;
    }
  }
  const GqVerdict v = IsGq(InducedGeometry(g, points));
  if (!v.is_gq) {
    q.witness = v.witness;
    return q;
  }
  q.s = v.s;
  q.t = v.t;
  if (v.s == 2 && v.t == 1) {
    q.kind = QuadKind::kGrid21;
  } else if (v.s == 2 && v.t == 2) {
    q.kind = QuadKind::kGq22;
  } else {
    q.witness = "GQ of order (" + std::to_string(v.s) + "," +
                std::to_string(v.t) + ")";
  }
  return q;
}

}  // namespace

std::vector<QuadRecord> EnumerateQuads(const Geometry& g) {
  const DistanceMatrix dm(g);
  if (!dm.connected()) {
    throw std::invalid_argument("quad enumeration needs a connected geometry");
  }
  std::set<PointSet> closures;
  for (int a = 0; a < g.point_count(); ++a) {
    dm.Sphere(a, 2).ForEach([&](int b) {
      if (b <= a) return;
      if ((g.neighbours(a) & g.neighbours(b)).Size() < 2) return;
      closures.insert(ConvexClosure(g, dm, PointSet{a, b}));
    });
  }
  std::vector<QuadRecord> out;
  for (const PointSet& c : closures) out.push_back(Classify(g, dm, c));
  return out;
}

}  // namespace nearhex
