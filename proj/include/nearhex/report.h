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

#ifndef NEARHEX_REPORT_H_
#define NEARHEX_REPORT_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nearhex/case_analysis.h"
#include "nearhex/geometry.h"

namespace nearhex {

using OrderedJson = nlohmann::ordered_json;

// One entry of a verification report.
struct CheckEntry {
  std::string check;
  std::string geometry;
  bool passed = false;
  OrderedJson counts = OrderedJson::object();
  std::vector<std::string> witnesses;  // sorted, at most kMaxWitnesses
};

OrderedJson EntryToJson(const CheckEntry& e);
OrderedJson ReportToJson(const std::vector<CheckEntry>& entries);

inline constexpr std::array<std::string_view, 7> kCheckNames = {
    "pls", "np", "dense", "params", "quads", "cases", "hyperplane"};
bool IsCheckName(std::string_view name);

// Checks that make sense for a model: "cases" needs pair labels (h3,
// dsp62) and "hyperplane" needs dsp62.
std::vector<std::string> ApplicableChecks(std::string_view model);

// Parameter values a model must reproduce.
struct ExpectedParameters {
  int v;
  int lines;
  std::set<int> line_sizes;
  std::set<int> lines_per_point;
  std::set<int> t2_values;
  int diameter;
};
std::optional<ExpectedParameters> ExpectedParametersFor(std::string_view model);

// Runs the named checks on a model geometry. Throws std::invalid_argument
// for an unknown check or one not applicable to the model.
std::vector<CheckEntry> RunChecks(const Geometry& g, std::string_view model,
                                  const std::vector<std::string>& checks);

// Builders for individual entries, shared with the acceptance suite.
CheckEntry PlsEntry(const Geometry& g);
CheckEntry NpEntry(const Geometry& g);
CheckEntry ParamsEntry(const Geometry& g, const ExpectedParameters& expected);
CheckEntry DenseEntry(const Geometry& g);
CheckEntry QuadsEntry(const Geometry& g, std::string_view model);
CheckEntry HyperplaneEntry(const Geometry& dsp);
std::vector<CheckEntry> CaseEntries(const Geometry& g,
                                    const std::vector<CaseReport>& reports);
// Completeness census of the primed triads behind the fourth line type of
// the ordered-pair model; documentation only, always passes.
CheckEntry DeBruynTriadEntry();

}  // namespace nearhex

#endif  // NEARHEX_REPORT_H_
