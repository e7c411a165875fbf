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
#include <random>
#include <set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nearhex/builders.h"
#include "nearhex/gq22.h"
#include "test_util.h"

namespace nearhex {
namespace {

using ::nearhex::testing::Grid33;
using ::testing::ElementsAre;

Geometry Cycle(int n) {
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i) lines.push_back({i, (i + 1) % n});
  return Geometry(n, lines, {}, "cycle");
}

// Brute-force NP oracle on per-point BFS tables.
bool OracleNp(const Geometry& g) {
  for (int x = 0; x < g.point_count(); ++x) {
    DistanceTable t = Distances(g, x);
    for (const Line& l : g.lines()) {
      if (std::find(l.begin(), l.end(), x) != l.end()) continue;
      int best = kUnreachable, ties = 0;
      for (int p : l) {
        if (t.dist[p] < best) {
          best = t.dist[p];
          ties = 1;
        } else if (t.dist[p] == best) {
          ++ties;
        }
      }
      if (ties != 1) return false;
    }
  }
  return true;
}

TEST(CheckNpTest, SmallExamples) {
  EXPECT_TRUE(CheckNp(BuildW2()).ok);
  EXPECT_TRUE(CheckNp(Grid33()).ok);
  NpVerdict square = CheckNp(Cycle(4));
  EXPECT_TRUE(square.ok);
  EXPECT_EQ(square.checked_pairs, 8);
  Geometry five = Cycle(5);
  NpVerdict pentagon = CheckNp(five);
  EXPECT_FALSE(pentagon.ok);
  ASSERT_GE(pentagon.witness_line, 0);
  const Line& l = five.line(pentagon.witness_line);
  DistanceTable t = Distances(five, pentagon.witness_point);
  EXPECT_EQ(t.dist[l[0]], t.dist[l[1]]);
  EXPECT_THROW(CheckNp(Geometry(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST(CheckNpTest, NearHexagonsAgreeWithOracle) {
  for (auto name : {"h3", "h3-partition", "h3-debruyn", "dsp62"}) {
    Geometry g = BuildModel(name);
    NpVerdict v = CheckNp(g);
    EXPECT_TRUE(v.ok) << name;
    EXPECT_EQ(v.ok, OracleNp(g)) << name;
    long expected = 0;
    for (int i = 0; i < g.line_count(); ++i) {
      expected += g.point_count() - static_cast<int>(g.line(i).size());
    }
    EXPECT_EQ(v.checked_pairs, expected) << name;
  }
}

// Breaking a line of W2 into a geometry that is not a near polygon.
TEST(CheckNpTest, OracleAgreesOnDamagedGeometries) {
  Geometry w2 = BuildW2();
  for (int drop = 0; drop < w2.line_count(); ++drop) {
    std::vector<Line> lines = w2.lines();
    lines.erase(lines.begin() + drop);
    Geometry g(15, lines);
    if (!ComputeMetrics(g).connected) continue;
    EXPECT_EQ(CheckNp(g).ok, OracleNp(g)) << drop;
  }
}

TEST(ParametersTest, Examples) {
  ParameterSummary h3 = ComputeParameters(BuildH3());
  EXPECT_EQ(h3.v, 105);
  EXPECT_EQ(h3.line_count, 210);
  EXPECT_THAT(h3.line_sizes, ElementsAre(3));
  EXPECT_THAT(h3.lines_per_point, ElementsAre(6));
  EXPECT_THAT(h3.t2_values, ElementsAre(1, 2));
  EXPECT_EQ(h3.diameter, 3);
  EXPECT_TRUE(h3.dense);
  EXPECT_TRUE(h3.slim);
  EXPECT_TRUE(h3.connected);

  ParameterSummary dsp = ComputeParameters(BuildModel("dsp62"));
  EXPECT_EQ(dsp.v, 135);
  EXPECT_THAT(dsp.lines_per_point, ElementsAre(7));
  EXPECT_THAT(dsp.t2_values, ElementsAre(2));
  EXPECT_EQ(dsp.diameter, 3);
  EXPECT_TRUE(dsp.dense);

  ParameterSummary w2 = ComputeParameters(BuildW2());
  EXPECT_EQ(w2.v, 15);
  EXPECT_THAT(w2.lines_per_point, ElementsAre(3));
  EXPECT_THAT(w2.t2_values, ElementsAre(2));
  EXPECT_EQ(w2.diameter, 2);

  ParameterSummary hexagon = ComputeParameters(Cycle(6));
  EXPECT_THAT(hexagon.line_sizes, ElementsAre(2));
  EXPECT_FALSE(hexagon.slim);
  EXPECT_FALSE(hexagon.dense);
  EXPECT_THAT(hexagon.t2_values, ElementsAre(0));
}

// Oracle for t2: common neighbour counts of distance-2 pairs taken from
// explicit line membership.
TEST(ParametersTest, T2MatchesLineScan) {
  Geometry g = BuildH3Partitions();
  std::set<int> t2;
  for (int a = 0; a < g.point_count(); ++a) {
    DistanceTable t = Distances(g, a);
    for (int b = a + 1; b < g.point_count(); ++b) {
      if (t.dist[b] != 2) continue;
      int common = 0;
      for (int c = 0; c < g.point_count(); ++c) {
        bool ca = false, cb = false;
        for (int li : g.lines_through(c)) {
          const Line& l = g.line(li);
          ca |= std::count(l.begin(), l.end(), a) > 0;
          cb |= std::count(l.begin(), l.end(), b) > 0;
        }
        common += (ca && cb) ? 1 : 0;
      }
      t2.insert(common - 1);
    }
  }
  EXPECT_EQ(ComputeParameters(g).t2_values, t2);
}

TEST(QuadsTest, W2HasSingleQuad) {
  std::vector<QuadRecord> quads = EnumerateQuads(BuildW2());
  ASSERT_EQ(quads.size(), 1u);
  EXPECT_EQ(quads[0].points.Size(), 15);
  EXPECT_EQ(quads[0].kind, QuadKind::kGq22);
}

TEST(QuadsTest, H3HasBothKinds) {
  std::vector<QuadRecord> quads = EnumerateQuads(BuildH3());
  int grids = 0, gqs = 0;
  for (const QuadRecord& q : quads) {
    if (q.kind == QuadKind::kGrid21) {
      ++grids;
      EXPECT_EQ(q.points.Size(), 9);
    } else if (q.kind == QuadKind::kGq22) {
      ++gqs;
      EXPECT_EQ(q.points.Size(), 15);
    } else {
      ADD_FAILURE() << q.witness;
    }
  }
  EXPECT_GT(grids, 0);
  EXPECT_GT(gqs, 0);
}

TEST(QuadsTest, DspQuadsAreAllGq22) {
  Geometry g = BuildModel("dsp62");
  std::vector<QuadRecord> quads = EnumerateQuads(g);
  ASSERT_FALSE(quads.empty());
  for (const QuadRecord& q : quads) {
    EXPECT_EQ(q.kind, QuadKind::kGq22);
    EXPECT_EQ(q.points.Size(), 15);
    EXPECT_EQ(q.s, 2);
    EXPECT_EQ(q.t, 2);
  }
}

// Every distance-2 pair lies in exactly one quad and each quad is convex.
TEST(QuadsTest, QuadsCoverDistanceTwoPairsOnce) {
  Geometry g = BuildH3();
  DistanceMatrix dm(g);
  std::vector<QuadRecord> quads = EnumerateQuads(g);
  for (const QuadRecord& q : quads) {
    EXPECT_EQ(ConvexClosure(g, dm, q.points), q.points);
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, g.point_count() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    int a = pick(rng), b = pick(rng);
    if (dm(a, b) != 2) continue;
    int hits = 0;
    for (const QuadRecord& q : quads) {
      hits += (q.points.Contains(a) && q.points.Contains(b)) ? 1 : 0;
    }
    EXPECT_EQ(hits, 1);
  }
}

TEST(QuadsTest, KindNames) {
  EXPECT_EQ(QuadKindName(QuadKind::kGrid21), "grid21");
  EXPECT_EQ(QuadKindName(QuadKind::kGq22), "gq22");
  EXPECT_EQ(QuadKindName(QuadKind::kOther), "other");
}

}  // namespace
}  // namespace nearhex
