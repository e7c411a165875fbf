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

#include "nearhex/geometry_json.h"

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nearhex/builders.h"
#include "test_util.h"

namespace nearhex {
namespace {

using ::nearhex::testing::Grid33;
using ::testing::HasSubstr;
using ::testing::StartsWith;

TEST(GeometryJsonTest, RoundTripsEveryModel) {
  for (auto name : kModelNames) {
    Geometry g = BuildModel(name);
    std::string text = GeometryToJson(g);
    Geometry back = GeometryFromJson(text);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(back.name(), g.name());
    EXPECT_EQ(GeometryToJson(back), text) << name;
  }
}

TEST(GeometryJsonTest, DeterministicBytes) {
  EXPECT_EQ(GeometryToJson(BuildModel("dsp62")),
            GeometryToJson(BuildModel("dsp62")));
  std::string w2 = GeometryToJson(BuildW2());
  EXPECT_THAT(w2, StartsWith("{\n  \"name\": \"w2\""));
  EXPECT_THAT(w2, HasSubstr("{\"id\": 0, \"label\": \"12\"}"));
  EXPECT_THAT(w2, HasSubstr("[0, 9, 14]"));
}

TEST(GeometryJsonTest, UnlabelledRoundTrip) {
  Geometry g = Grid33();
  std::string text = GeometryToJson(g);
  EXPECT_THAT(text, ::testing::Not(HasSubstr("label")));
  EXPECT_EQ(GeometryFromJson(text), g);
}

TEST(GeometryJsonTest, AcceptsCompactInput) {
  Geometry g = GeometryFromJson(
      R"({"points":[{"id":1},{"id":0},{"id":2}],"lines":[[2,0,1]]})");
  EXPECT_EQ(g.point_count(), 3);
  EXPECT_EQ(g.line(0), (Line{0, 1, 2}));
  EXPECT_EQ(g.name(), "");
}

TEST(GeometryJsonTest, ParseErrors) {
  for (const char* bad : {
           "",
           "[]",
           "{\"points\": []}",
           "{\"lines\": []}",
           R"({"points":[{"id":0},{"id":2}],"lines":[]})",
           R"({"points":[{"id":0},{"id":0}],"lines":[]})",
           R"({"points":[{"id":"0"}],"lines":[]})",
           R"({"points":[{"id":0,"label":"12"},{"id":1}],"lines":[]})",
           R"({"points":[{"id":0,"label":"zz"}],"lines":[]})",
           R"({"points":[{"id":0},{"id":1}],"lines":[[0,2]]})",
           R"({"points":[{"id":0},{"id":1}],"lines":[[0,1],[1,0]]})",
           R"({"points":[{"id":0},{"id":1}],"lines":[0]})",
           R"({"name":3,"points":[],"lines":[]})",
       }) {
    EXPECT_THROW(GeometryFromJson(bad), ParseError) << bad;
  }
}

}  // namespace
}  // namespace nearhex
