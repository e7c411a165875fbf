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

#include "nearhex/iso.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nearhex/builders.h"
#include "nearhex/gq22.h"
#include "test_util.h"

namespace nearhex {
namespace {

using ::nearhex::testing::Grid33;

std::vector<int> RandomPermutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

TEST(RelabelTest, MovesPointsAndValidates) {
  Geometry g = Grid33();
  std::vector<int> perm = {8, 7, 6, 5, 4, 3, 2, 1, 0};
  Geometry r = Relabel(g, perm);
  EXPECT_TRUE(r.Collinear(8, 6));
  EXPECT_TRUE(IsIsomorphism(g, r, perm));
  EXPECT_THROW(Relabel(g, {0, 0, 1, 2, 3, 4, 5, 6, 7}), std::invalid_argument);
  EXPECT_THROW(Relabel(g, {0, 1}), std::invalid_argument);
}

// Canonical forms are invariant under random relabelings.
TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  std::mt19937 rng(20261015);
  for (auto name : kModelNames) {
    Geometry g = BuildModel(name);
    CanonicalForm base = ComputeCanonicalForm(g);
    const int trials = g.point_count() > 100 ? 20 : 100;
    for (int t = 0; t < trials; ++t) {
      std::vector<int> perm = RandomPermutation(rng, g.point_count());
      Geometry r = Relabel(g, perm);
      CanonicalForm c = ComputeCanonicalForm(r);
      ASSERT_EQ(c, base) << name << " trial " << t;
    }
  }
}

// Relabeling through the canonical labeling reproduces the certificate
// geometry, so equal certificates give an explicit isomorphism.
TEST(CanonicalFormTest, LabelingIsAPermutation) {
  Geometry g = BuildModel("h3-debruyn");
  CanonicalForm c = ComputeCanonicalForm(g);
  std::vector<int> sorted = c.point_labeling;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> id(g.point_count());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(sorted, id);
  Geometry canon = Relabel(g, c.point_labeling);
  EXPECT_EQ(ComputeCanonicalForm(canon), c);
}

TEST(CanonicalFormTest, W2IsSelfDual) {
  Geometry w2 = BuildW2();
  EXPECT_EQ(ComputeCanonicalForm(DualGeometry(w2)), ComputeCanonicalForm(w2));
  EXPECT_EQ(ComputeCanonicalForm(DualGeometry(DualGeometry(w2))),
            ComputeCanonicalForm(w2));
  EXPECT_FALSE(ComputeCanonicalForm(Grid33()) == ComputeCanonicalForm(w2));
}

TEST(AreIsomorphicTest, H3Models) {
  Geometry h3 = BuildH3();
  for (auto name : {"h3-partition", "h3-debruyn"}) {
    Geometry other = BuildModel(name);
    IsoVerdict v = AreIsomorphic(h3, other);
    EXPECT_TRUE(v.isomorphic) << name << ": " << v.reason;
    EXPECT_TRUE(IsIsomorphism(h3, other, v.mapping)) << name;
  }
}

TEST(AreIsomorphicTest, RandomRelabelingsGiveVerifiedMappings) {
  std::mt19937 rng(99);
  Geometry dsp = BuildModel("dsp62");
  for (int t = 0; t < 5; ++t) {
    Geometry r = Relabel(dsp, RandomPermutation(rng, dsp.point_count()));
    IsoVerdict v = AreIsomorphic(dsp, r);
    ASSERT_TRUE(v.isomorphic) << v.reason;
    EXPECT_TRUE(IsIsomorphism(dsp, r, v.mapping));
  }
}

TEST(AreIsomorphicTest, DistinguishesNonIsomorphic) {
  Geometry h3 = BuildH3();
  IsoVerdict counts = AreIsomorphic(h3, BuildModel("dsp62"));
  EXPECT_FALSE(counts.isomorphic);
  EXPECT_FALSE(counts.reason.empty());
  EXPECT_TRUE(counts.mapping.empty());

  // Same point and line counts, different structure.
  Geometry two_grids(18, {{0, 1, 2},    {3, 4, 5},    {6, 7, 8},
                          {0, 3, 6},    {1, 4, 7},    {2, 5, 8},
                          {9, 10, 11},  {12, 13, 14}, {15, 16, 17},
                          {9, 12, 15},  {10, 13, 16}, {11, 14, 17}});
  Geometry shifted(18, {{0, 1, 2},    {3, 4, 5},    {6, 7, 8},
                        {0, 3, 6},    {1, 4, 7},    {2, 5, 9},
                        {8, 10, 11},  {12, 13, 14}, {15, 16, 17},
                        {9, 12, 15},  {10, 13, 16}, {11, 14, 17}});
  EXPECT_FALSE(AreIsomorphic(two_grids, shifted).isomorphic);

  // Relabeled W2 stays isomorphic; dropping a line does not.
  Geometry w2 = BuildW2();
  std::vector<Line> lines = w2.lines();
  std::mt19937 rng(1);
  Geometry r = Relabel(w2, RandomPermutation(rng, 15));
  EXPECT_TRUE(AreIsomorphic(w2, r).isomorphic);
  lines.pop_back();
  Geometry damaged(15, lines);
  EXPECT_FALSE(AreIsomorphic(w2, damaged).isomorphic);
}

TEST(AreIsomorphicTest, CertificateSeparatesEqualInvariants) {
  // Two 6-cycles versus one 12-cycle: equal degrees and line sizes.
  std::vector<Line> a, b;
  for (int i = 0; i < 6; ++i) {
    a.push_back({i, (i + 1) % 6});
    a.push_back({6 + i, 6 + (i + 1) % 6});
  }
  for (int i = 0; i < 12; ++i) b.push_back({i, (i + 1) % 12});
  Geometry ga(12, a), gb(12, b);
  EXPECT_FALSE(ComputeCanonicalForm(ga) == ComputeCanonicalForm(gb));
  EXPECT_FALSE(AreIsomorphic(ga, gb).isomorphic);
}

}  // namespace
}  // namespace nearhex
