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

#ifndef NEARHEX_ACCEPTANCE_H_
#define NEARHEX_ACCEPTANCE_H_

#include <string>
#include <vector>

#include "nearhex/report.h"

namespace nearhex {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  // Documentation-only criteria always pass; their details carry the data.
  bool informational = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when unbounded
  std::vector<std::string> failures;
  OrderedJson details = OrderedJson::object();
};

inline constexpr int kCriterionCount = 10;

// Runs criterion id (1..kCriterionCount) from scratch, timing everything
// including construction. A criterion fails when any check fails or the
// wall-clock limit is exceeded. Throws std::out_of_range for a bad id.
CriterionResult RunCriterion(int id);
std::vector<CriterionResult> RunAcceptanceSuite();

// "[PASS]  3  title  (0.012 s, limit 5 s)"
std::string FormatCriterionLine(const CriterionResult& r);
// Timing is left out so the document is byte-stable between runs.
OrderedJson AcceptanceToJson(const std::vector<CriterionResult>& results);

}  // namespace nearhex

#endif  // NEARHEX_ACCEPTANCE_H_
