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

#include "nearhex/case_analysis.h"

#include <functional>
#include <map>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nearhex/builders.h"
#include "test_util.h"

namespace nearhex {
namespace {

using ::nearhex::testing::Pt;
using ::nearhex::testing::Pts;
using ::testing::ElementsAre;
using ::testing::Pair;

class CaseAnalysisTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    h3_ = new Geometry(BuildH3());
    dsp_ = new Geometry(BuildDsp62(*h3_));
    h3_reports_ = new std::vector<CaseReport>(H3CaseAnalysis(*h3_));
    dsp_reports_ =
        new std::vector<CaseReport>(DspCaseAnalysis(*dsp_, PairPoints(*dsp_)));
  }
  static void TearDownTestSuite() {
    delete h3_;
    delete dsp_;
    delete h3_reports_;
    delete dsp_reports_;
  }
  static const CaseReport& Find(const std::vector<CaseReport>& reports,
                                const std::string& id) {
    for (const CaseReport& r : reports) {
      if (r.id == id) return r;
    }
    throw std::invalid_argument("no report " + id);
  }
  static long Count(const std::vector<CaseReport>& reports,
                    std::initializer_list<std::string> ids) {
    long total = 0;
    for (const auto& id : ids) total += Find(reports, id).count;
    return total;
  }

  static Geometry* h3_;
  static Geometry* dsp_;
  static std::vector<CaseReport>* h3_reports_;
  static std::vector<CaseReport>* dsp_reports_;
};
Geometry* CaseAnalysisTest::h3_ = nullptr;
Geometry* CaseAnalysisTest::dsp_ = nullptr;
std::vector<CaseReport>* CaseAnalysisTest::h3_reports_ = nullptr;
std::vector<CaseReport>* CaseAnalysisTest::dsp_reports_ = nullptr;

// Geometric oracle: histogram of (distance, common neighbours) over pairs
// selected by a predicate.
std::map<std::pair<int, int>, long> PairHistogram(
    const Geometry& g, const std::function<bool(int, int)>& keep) {
  DistanceMatrix dm(g);
  std::map<std::pair<int, int>, long> h;
  for (int a = 0; a < g.point_count(); ++a) {
    for (int b = a + 1; b < g.point_count(); ++b) {
      if (!keep(a, b)) continue;
      ++h[{dm(a, b), (g.neighbours(a) & g.neighbours(b)).Size()}];
    }
  }
  return h;
}

TEST_F(CaseAnalysisTest, H3ReportsAllPass) {
  for (const CaseReport& r : *h3_reports_) {
    EXPECT_TRUE(r.ok) << r.id << " " << ::testing::PrintToString(r.witnesses);
    EXPECT_TRUE(r.witnesses.empty()) << r.id;
  }
}

TEST_F(CaseAnalysisTest, H3CountsMatchGeometry) {
  auto h = PairHistogram(*h3_, [](int, int) { return true; });
  EXPECT_THAT(h, ElementsAre(Pair(std::pair{1, 1}, 630),
                             Pair(std::pair{2, 2}, 630),
                             Pair(std::pair{2, 3}, 1680),
                             Pair(std::pair{3, 0}, 2520)));
  const auto& r = *h3_reports_;
  EXPECT_EQ(Find(r, "collinear").count, 630);
  EXPECT_EQ(Count(r, {"A1", "A2"}), 630);
  EXPECT_EQ(Find(r, "A3").count, 1680);
  EXPECT_EQ(Find(r, "A4").count, 2520);
  EXPECT_EQ(Count(r, {"collinear", "A1", "A2", "A3", "A4"}), 105 * 104 / 2);
  EXPECT_THAT(Find(r, "A1").common_neighbours, ElementsAre(Pair(2, 315)));
  EXPECT_THAT(Find(r, "A2").common_neighbours, ElementsAre(Pair(2, 315)));
  EXPECT_THAT(Find(r, "A3").common_neighbours, ElementsAre(Pair(3, 1680)));
  EXPECT_THAT(Find(r, "A4").distances, ElementsAre(Pair(3, 2520)));
}

TEST_F(CaseAnalysisTest, H3LineDistances) {
  const auto& r = *h3_reports_;
  // Every (point, line) pair with the point off the line.
  EXPECT_EQ(Count(r, {"line-dist2", "line-dist3"}), 210L * 102);
}

TEST_F(CaseAnalysisTest, A1Example) {
  const Geometry& g = *h3_;
  int a = Pt(g, "(12,12')"), b = Pt(g, "(12,34')");
  EXPECT_EQ(g.neighbours(a) & g.neighbours(b),
            Pts(g, {"(34,56')", "(56,56')"}));
}

TEST_F(CaseAnalysisTest, DspReportsAllPass) {
  for (const CaseReport& r : *dsp_reports_) {
    EXPECT_TRUE(r.ok) << r.id << " " << ::testing::PrintToString(r.witnesses);
  }
}

TEST_F(CaseAnalysisTest, DspCountsMatchGeometry) {
  PointSet pairs = PairPoints(*dsp_);
  auto touching = [&](int a, int b) {
    return !pairs.Contains(a) || !pairs.Contains(b);
  };
  auto h = PairHistogram(*dsp_, touching);
  EXPECT_THAT(h, ElementsAre(Pair(std::pair{1, 1}, 315),
                             Pair(std::pair{2, 3}, 1470),
                             Pair(std::pair{3, 0}, 1800)));
  const auto& r = *dsp_reports_;
  EXPECT_EQ(Count(r, {"B1", "B2", "B4", "B5"}), 1470);
  EXPECT_EQ(Count(r, {"B3", "B6", "B7"}), 1800);
  for (const char* id : {"B1", "B2", "B4", "B5"}) {
    const CaseReport& c = Find(r, id);
    EXPECT_THAT(c.common_neighbours, ElementsAre(Pair(3, c.count))) << id;
  }
  for (const char* id : {"B3", "B6", "B7"}) {
    const CaseReport& c = Find(r, id);
    EXPECT_THAT(c.distances, ElementsAre(Pair(3, c.count))) << id;
  }
  EXPECT_EQ(Count(r, {"inner-A1", "inner-A2", "inner-A3", "inner-A4"}),
            105 * 104 / 2 - 630);
}

TEST_F(CaseAnalysisTest, DspExamples) {
  const Geometry& g = *dsp_;
  DistanceMatrix dm(g);
  int p12 = Pt(g, "12");
  PointSet b1 = g.neighbours(p12) & g.neighbours(Pt(g, "13"));
  EXPECT_EQ(b1.Size(), 3);
  EXPECT_EQ(b1, Pts(g, {"45'", "46'", "56'"}));
  EXPECT_EQ(dm(p12, Pt(g, "13'")), 3);
  EXPECT_EQ((g.neighbours(p12) & g.neighbours(Pt(g, "(34,56')"))).Size(), 3);
}

TEST(CaseAnalysisErrorsTest, RejectsUnlabelledGeometry) {
  Geometry g = BuildH3();
  Geometry bare(g.point_count(), g.lines());
  EXPECT_THROW(H3CaseAnalysis(bare), std::invalid_argument);
  EXPECT_THROW(H3CaseAnalysis(BuildH3Partitions()), std::invalid_argument);
}

}  // namespace
}  // namespace nearhex
