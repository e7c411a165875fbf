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

#include "nearhex/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nearhex/builders.h"
#include "nearhex/geometry_json.h"
#include "nearhex/iso.h"
#include "nlohmann/json.hpp"

namespace nearhex {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nearhex");
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("nearhex_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  static std::string Slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }
  static void Write(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, BuildWritesModels) {
  CliRun w2 = Cli({"build", "--model", "w2", "--out", Path("w2.json")});
  ASSERT_EQ(w2.code, kExitOk) << w2.err;
  Geometry g = GeometryFromJson(Slurp(Path("w2.json")));
  EXPECT_EQ(g.point_count(), 15);
  EXPECT_EQ(g.line_count(), 15);

  CliRun dsp = Cli({"build", "--model", "dsp62"});
  ASSERT_EQ(dsp.code, kExitOk);
  Geometry d = GeometryFromJson(dsp.out);
  EXPECT_EQ(d.point_count(), 135);
  EXPECT_EQ(d.line_count(), 315);
}

TEST_F(CliTest, BuildIsByteDeterministic) {
  ASSERT_EQ(Cli({"build", "--model", "h3", "--out", Path("a.json")}).code, 0);
  ASSERT_EQ(Cli({"build", "--model", "h3", "--out", Path("b.json")}).code, 0);
  EXPECT_EQ(Slurp(Path("a.json")), Slurp(Path("b.json")));
  EXPECT_EQ(Cli({"export", "--model", "h3"}).out, Slurp(Path("a.json")));
}

TEST_F(CliTest, VerifyParams) {
  CliRun r = Cli({"verify", "--model", "h3", "--checks", "params"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["check"], "params");
  EXPECT_EQ(j["checks"][0]["counts"]["t2_values"], nlohmann::json({1, 2}));
}

TEST_F(CliTest, VerifyHyperplaneToFile) {
  CliRun r = Cli({"verify", "--model", "dsp62", "--checks", "hyperplane", "--out",
               Path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "pass  hyperplane\n");
  auto j = nlohmann::json::parse(Slurp(Path("r.json")));
  EXPECT_EQ(j["checks"][0]["verdict"], "pass");
}

TEST_F(CliTest, VerifyDeBruynModel) {
  CliRun r = Cli({"verify", "--model", "h3-debruyn", "--checks", "pls,params"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 2u);
}

TEST_F(CliTest, VerifyRejectsBadChecks) {
  EXPECT_EQ(Cli({"verify", "--model", "h3", "--checks", "bogus"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"verify", "--model", "h3", "--checks", "hyperplane"}).code,
            kExitUsage);
}

TEST_F(CliTest, IsoExitCodes) {
  ASSERT_EQ(Cli({"build", "--model", "h3", "--out", Path("h3.json")}).code, 0);
  ASSERT_EQ(
      Cli({"build", "--model", "h3-partition", "--out", Path("p.json")}).code,
      0);
  ASSERT_EQ(Cli({"build", "--model", "dsp62", "--out", Path("d.json")}).code,
            0);
  Write(Path("bad.json"), "{\"points\": 3}");

  CliRun same = Cli({"iso", Path("h3.json"), Path("p.json")});
  EXPECT_EQ(same.code, kExitOk) << same.err;
  EXPECT_THAT(same.out, StartsWith("isomorphic\n"));
  EXPECT_THAT(same.out, HasSubstr("(12,12') -> {"));

  CliRun differ = Cli({"iso", Path("h3.json"), Path("d.json")});
  EXPECT_EQ(differ.code, kExitCheckFailed);
  EXPECT_THAT(differ.out, StartsWith("not isomorphic: "));

  EXPECT_EQ(Cli({"iso", Path("h3.json"), Path("bad.json")}).code, kExitUsage);
  EXPECT_EQ(Cli({"iso", Path("h3.json"), Path("missing.json")}).code,
            kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  CliRun unknown = Cli({"build", "--model", "h4"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_THAT(unknown.err, HasSubstr("unknown model"));
  EXPECT_EQ(Cli({"build", "--model", "w2", "--out",
                 Path("no/such/dir/w2.json")})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"export", "--model", "w2", "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"build"}).code, kExitUsage);
  CliRun help = Cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_THAT(help.out, HasSubstr("verify"));
}

TEST_F(CliTest, ReportPasses) {
  CliRun r = Cli({"report", "--out", Path("acc.json")});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_THAT(r.out, HasSubstr("all criteria passed"));
  auto j = nlohmann::json::parse(Slurp(Path("acc.json")));
  ASSERT_TRUE(j.contains("criteria"));
  EXPECT_EQ(j.dump().find("\"seconds\""), std::string::npos);
}

}  // namespace
}  // namespace nearhex
