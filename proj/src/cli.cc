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

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nearhex/acceptance.h"
#include "nearhex/builders.h"
#include "nearhex/geometry_json.h"
#include "nearhex/iso.h"
#include "nearhex/report.h"

namespace nearhex {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void CheckModel(const std::string& model) {
  if (!IsModelName(model)) {
    std::string known;
    for (auto name : kModelNames) known += " " + std::string(name);
    throw UsageError("unknown model '" + model + "' (known:" + known + ")");
  }
}

// Writes to path, or to out when path is empty.
void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw UsageError("cannot write " + path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

std::vector<std::string> SplitChecks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (!IsCheckName(item)) throw UsageError("unknown check '" + item + "'");
    out.push_back(item);
  }
  return out;
}

int Build(const std::string& model, const std::string& path,
          std::ostream& out) {
  CheckModel(model);
  Emit(GeometryToJson(BuildModel(model)), path, out);
  return kExitOk;
}

int Verify(const std::string& model, const std::string& checks_arg,
           const std::string& path, std::ostream& out) {
  CheckModel(model);
  std::vector<std::string> checks = checks_arg.empty()
                                        ? ApplicableChecks(model)
                                        : SplitChecks(checks_arg);
  const auto applicable = ApplicableChecks(model);
  for (const std::string& c : checks) {
    if (std::find(applicable.begin(), applicable.end(), c) ==
        applicable.end()) {
      throw UsageError("check '" + c + "' does not apply to model " + model);
    }
  }
  const std::vector<CheckEntry> entries =
      RunChecks(BuildModel(model), model, checks);
  Emit(ReportToJson(entries).dump(2) + "\n", path, out);
  bool all = true;
  for (const CheckEntry& e : entries) {
    all = all && e.passed;
    if (!path.empty()) {
      out << (e.passed ? "pass  " : "FAIL  ") << e.check << "\n";
    }
  }
  return all ? kExitOk : kExitCheckFailed;
}

int Iso(const std::string& a_path, const std::string& b_path,
        std::ostream& out, std::ostream& err) {
  Geometry a, b;
  try {
    a = GeometryFromJson(ReadFile(a_path));
    b = GeometryFromJson(ReadFile(b_path));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const IsoVerdict v = AreIsomorphic(a, b);
  if (!v.isomorphic) {
    out << "not isomorphic: " << v.reason << "\n";
    return kExitCheckFailed;
  }
  out << "isomorphic\n";
  for (int p = 0; p < a.point_count(); ++p) {
    out << a.PointName(p) << " -> " << b.PointName(v.mapping[p]) << "\n";
  }
  return kExitOk;
}

int Report(const std::string& path, std::ostream& out) {
  bool all = true;
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(RunCriterion(id));
    out << FormatCriterionLine(results.back()) << "\n";
    all = all && results.back().passed;
  }
  if (!path.empty()) Emit(AcceptanceToJson(results).dump(2) + "\n", path, out);
  out << (all ? "all criteria passed\n" : "some criteria FAILED\n");
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Builds and verifies slim dense near hexagons on 105 and 135 "
               "points."};
  app.require_subcommand(1);

  std::string model, out_path, checks, format = "json", a_path, b_path;

  auto* build = app.add_subcommand("build", "Write a model as JSON");
  build->add_option("--model", model, "w2, h3, h3-partition, h3-debruyn, "
                                      "dsp62")->required();
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* exp = app.add_subcommand("export", "Print a model as JSON");
  exp->add_option("--model", model)->required();
  exp->add_option("--format", format, "Only json is supported");

  auto* verify = app.add_subcommand("verify", "Run checks on a model");
  verify->add_option("--model", model)->required();
  verify->add_option("--checks", checks,
                     "Comma list of pls,np,dense,params,quads,cases,"
                     "hyperplane");
  verify->add_option("--out", out_path, "Report file (default stdout)");

  auto* iso = app.add_subcommand("iso", "Test two geometry files for "
                                        "isomorphism");
  iso->add_option("a", a_path)->required();
  iso->add_option("b", b_path)->required();

  auto* report = app.add_subcommand("report", "Run the acceptance suite");
  report->add_option("--out", out_path, "JSON report file");

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) return Build(model, out_path, out);
    if (*exp) {
      if (format != "json") throw UsageError("unsupported format " + format);
      return Build(model, "", out);
    }
    if (*verify) return Verify(model, checks, out_path, out);
    if (*iso) return Iso(a_path, b_path, out, err);
    if (*report) return Report(out_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nearhex
