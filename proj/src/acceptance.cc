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

#include "nearhex/acceptance.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "nearhex/builders.h"
#include "nearhex/case_analysis.h"
#include "nearhex/gq22.h"
#include "nearhex/iso.h"
#include "nearhex/verify.h"

namespace nearhex {
namespace {

// Columns of the classification table of slim dense near hexagons used
// here: points, lines per point minus one, and the t2 values.
struct TableColumn {
  int v;
  int t;
  std::set<int> t2;
};
constexpr int kH3Column = 0;
constexpr int kDspColumn = 1;
const TableColumn kTable[] = {{105, 5, {1, 2}}, {135, 6, {2}}};

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}
  void Expect(bool ok, const std::string& what) {
    if (!ok) r_.failures.push_back(what);
  }
  OrderedJson& details() { return r_.details; }

 private:
  CriterionResult& r_;
};

std::string Show(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

void CheckNearHexagon(Checker& c, const Geometry& g, const TableColumn& col,
                      int expected_lines) {
  const ParameterSummary s = ComputeParameters(g);
  const NpVerdict np = CheckNp(g);
  const long non_incident =
      static_cast<long>(g.point_count()) * g.line_count() -
      3L * g.line_count();
  c.details()["v"] = s.v;
  c.details()["lines"] = s.line_count;
  c.details()["line_sizes"] = s.line_sizes;
  c.details()["lines_per_point"] = s.lines_per_point;
  c.details()["t2_values"] = s.t2_values;
  c.details()["diameter"] = s.diameter;
  c.details()["dense"] = s.dense;
  c.details()["np_pairs_checked"] = np.checked_pairs;
  c.Expect(s.v == col.v, "v = " + std::to_string(s.v));
  c.Expect(s.line_count == expected_lines,
           "lines = " + std::to_string(s.line_count));
  c.Expect(s.slim, "not slim");
  c.Expect(s.lines_per_point == std::set<int>{col.t + 1},
           "lines per point " + Show(s.lines_per_point));
  c.Expect(s.t2_values == col.t2, "t2 values " + Show(s.t2_values));
  c.Expect(s.connected && s.diameter == 3,
           "diameter " + std::to_string(s.diameter));
  c.Expect(s.dense, "not dense");
  c.Expect(np.ok, "near-polygon property fails at point " +
                      std::to_string(np.witness_point) + ", line " +
                      std::to_string(np.witness_line));
  c.Expect(np.checked_pairs == non_incident,
           "checked " + std::to_string(np.checked_pairs) +
               " point-line pairs, expected " + std::to_string(non_incident));
}

void CheckCaseReports(Checker& c, const std::vector<CaseReport>& reports) {
  for (const CaseReport& r : reports) {
    OrderedJson j;
    j["count"] = r.count;
    j["expectation"] = r.expectation;
    OrderedJson common = OrderedJson::object();
    for (const auto& [k, n] : r.common_neighbours) {
      common[std::to_string(k)] = n;
    }
    OrderedJson dist = OrderedJson::object();
    for (const auto& [k, n] : r.distances) dist[std::to_string(k)] = n;
    if (!r.common_neighbours.empty()) j["common_neighbours"] = common;
    if (!r.distances.empty()) j["distances"] = dist;
    c.details()[r.id] = j;
    c.Expect(r.ok, r.id + ": " + r.expectation +
                       (r.witnesses.empty() ? "" : " (" + r.witnesses[0] + ")"));
    c.Expect(r.count > 0, r.id + ": no instances");
  }
}

long CountOf(const std::vector<CaseReport>& reports, const std::string& id) {
  for (const CaseReport& r : reports) {
    if (r.id == id) return r.count;
  }
  return -1;
}

void W2Model(Checker& c) {
  const Geometry w2 = BuildW2();
  const GqVerdict gq = IsGq(w2);
  const IsoVerdict self_dual = AreIsomorphic(DualGeometry(w2), w2);
  c.details()["points"] = w2.point_count();
  c.details()["lines"] = w2.line_count();
  c.details()["order"] = {gq.s, gq.t};
  c.details()["self_dual"] = self_dual.isomorphic;
  c.Expect(w2.point_count() == 15 && w2.line_count() == 15,
           "expected 15 points and 15 lines");
  c.Expect(gq.is_gq && gq.s == 2 && gq.t == 2, "not a (2,2)-GQ: " +
                                                    gq.witness);
  c.Expect(self_dual.isomorphic, "dual not isomorphic: " + self_dual.reason);
}

void Triads(Checker& c) {
  const Geometry w2 = BuildW2();
  for (TriadMode mode : {TriadMode::kPoint, TriadMode::kLine}) {
    const std::string name = mode == TriadMode::kPoint ? "point" : "line";
    // Line triads live on the dual, where lines of W(2) are points.
    const Geometry host = mode == TriadMode::kPoint ? w2 : DualGeometry(w2);
    int complete = 0, incomplete = 0, irregular = 0;
    const auto triads = EnumerateTriads(w2, mode);
    for (const Triad& t : triads) {
      const int perp = t.perp.Size();
      if (perp != 1 && perp != 3) ++irregular;
      complete += t.kind == TriadKind::kComplete;
      incomplete += t.kind == TriadKind::kIncomplete;
      if (t.kind != TriadKind::kComplete) continue;
      const std::vector<int> q = t.perp.ToVector();
      const Triad back = MakeTriad(host, q[0], q[1], q[2]);
      c.Expect(back.kind == TriadKind::kComplete &&
                   back.perp == PointSet{t.elements[0], t.elements[1],
                                         t.elements[2]},
               name + ": perp of a complete triad does not return to it");
    }
    c.details()[name + "_triads"] = triads.size();
    c.details()[name + "_complete"] = complete;
    c.details()[name + "_incomplete"] = incomplete;
    c.Expect(triads.size() == 80, name + " triads: " +
                                      std::to_string(triads.size()));
    c.Expect(irregular == 0, name + " triads with |perp| not in {1,3}");
    c.Expect(complete == 20 && incomplete == 60,
             name + " triads split " + std::to_string(complete) + "/" +
                 std::to_string(incomplete));
  }

  int grids = 0;
  for (const Triad& t : EnumerateTriads(w2, TriadMode::kPoint)) {
    if (t.kind != TriadKind::kIncomplete) continue;
    try {
      const PointSet grid = IncompleteTriadSubGq(w2, t);
      c.Expect(grid.Size() == 9, "grid with " + std::to_string(grid.Size()) +
                                     " points");
      ++grids;
    } catch (const ConsistencyError& e) {
      c.Expect(false, e.what());
    }
  }
  c.details()["incomplete_triads_with_unique_grid"] = grids;
  c.Expect(grids == 60, "unique grids found for " + std::to_string(grids) +
                            " incomplete triads");

  for (TriadMode mode : {TriadMode::kPoint, TriadMode::kLine}) {
    const Geometry g = mode == TriadMode::kPoint ? w2 : DualGeometry(w2);
    int pairs = 0;
    for (int x = 0; x < g.point_count(); ++x) {
      for (int y = x + 1; y < g.point_count(); ++y) {
        if (g.Collinear(x, y)) continue;
        try {
          CompleteTriadThrough(g, x, y);
          ++pairs;
        } catch (const ConsistencyError& e) {
          c.Expect(false, e.what());
        }
      }
    }
    const std::string name = mode == TriadMode::kPoint
                                 ? "non_collinear_point_pairs"
                                 : "disjoint_line_pairs";
    c.details()[name + "_in_one_complete_triad"] = pairs;
    c.Expect(pairs == 60, name + ": " + std::to_string(pairs));
  }
}

void H3Parameters(Checker& c) {
  CheckNearHexagon(c, BuildH3(), kTable[kH3Column], 210);
}

void DspParameters(Checker& c) {
  CheckNearHexagon(c, BuildDsp62(BuildH3()), kTable[kDspColumn], 315);
}

void H3Cases(Checker& c) {
  const Geometry h3 = BuildH3();
  const auto reports = H3CaseAnalysis(h3);
  CheckCaseReports(c, reports);
  long total = 0;
  for (const char* id : {"collinear", "A1", "A2", "A3", "A4"}) {
    total += CountOf(reports, id);
  }
  c.details()["pairs_classified"] = total;
  c.Expect(total == 5460, "cases cover " + std::to_string(total) +
                              " of 5460 pairs");
}

void DspCases(Checker& c) {
  const Geometry dsp = BuildDsp62(BuildH3());
  const PointSet pairs = PairPoints(dsp);
  const auto reports = DspCaseAnalysis(dsp, pairs);
  CheckCaseReports(c, reports);
  for (const char* id : {"B1", "B2", "B4", "B5"}) {
    for (const CaseReport& r : reports) {
      if (r.id != id) continue;
      const bool exactly_three =
          r.common_neighbours.size() == 1 &&
          r.common_neighbours.begin()->first == 3;
      c.details()[std::string(id)]["exactly_three"] = exactly_three;
    }
  }
  long touching_collinear = 0;
  for (int a = 0; a < dsp.point_count(); ++a) {
    for (int b = a + 1; b < dsp.point_count(); ++b) {
      if (dsp.Collinear(a, b) && !(pairs.Contains(a) && pairs.Contains(b))) {
        ++touching_collinear;
      }
    }
  }
  long total = touching_collinear;
  for (const char* id : {"B1", "B2", "B3", "B4", "B5", "B6", "B7"}) {
    total += CountOf(reports, id);
  }
  const long expected = 135L * 134 / 2 - 105L * 104 / 2;
  c.details()["pairs_touching_p_or_p_primed"] = total;
  c.Expect(total == expected, "B cases cover " + std::to_string(total) +
                                  " of " + std::to_string(expected) +
                                  " pairs");
}

void Hyperplane(Checker& c) {
  const Geometry dsp = BuildDsp62(BuildH3());
  const PointSet pairs = PairPoints(dsp);
  c.details()["points"] = pairs.Size();
  c.details()["geometric_hyperplane"] = IsGeometricHyperplane(dsp, pairs);
  c.Expect(pairs.Size() == 105, "pair points: " +
                                    std::to_string(pairs.Size()));
  c.Expect(IsGeometricHyperplane(dsp, pairs),
           "pair points do not form a geometric hyperplane");
}

void Isomorphisms(Checker& c) {
  const Geometry h3 = BuildH3();
  const Geometry partitions = BuildH3Partitions();
  const Geometry debruyn = BuildH3DeBruyn();
  const Geometry dsp = BuildDsp62(h3);
  auto expect_iso = [&](const Geometry& a, const Geometry& b) {
    const IsoVerdict v = AreIsomorphic(a, b);
    const std::string key = a.name() + "~" + b.name();
    c.details()[key] = v.isomorphic;
    c.Expect(v.isomorphic, key + ": " + v.reason);
    if (v.isomorphic) {
      c.Expect(IsIsomorphism(a, b, v.mapping),
               key + ": returned bijection does not carry lines to lines");
    }
  };
  expect_iso(h3, partitions);
  expect_iso(h3, debruyn);
  expect_iso(partitions, debruyn);
  const IsoVerdict v = AreIsomorphic(h3, dsp);
  c.details()["h3~dsp62"] = v.isomorphic;
  c.details()["h3~dsp62 reason"] = v.reason;
  c.Expect(!v.isomorphic, "h3 and dsp62 reported isomorphic");
}

void Quads(Checker& c) {
  const Geometry h3 = BuildH3();
  const Geometry dsp = BuildDsp62(h3);
  auto census = [&](const Geometry& g) {
    std::map<QuadKind, int> out;
    for (const QuadRecord& q : EnumerateQuads(g)) {
      ++out[q.kind];
      if (q.kind == QuadKind::kGrid21) {
        c.Expect(q.points.Size() == 9, "grid quad with " +
                                           std::to_string(q.points.Size()) +
                                           " points");
      } else if (q.kind == QuadKind::kGq22) {
        c.Expect(q.points.Size() == 15, "(2,2) quad with " +
                                            std::to_string(q.points.Size()) +
                                            " points");
      } else {
        c.Expect(false, g.name() + ": quad classified other: " + q.witness);
      }
    }
    OrderedJson j;
    j["grid21"] = out[QuadKind::kGrid21];
    j["gq22"] = out[QuadKind::kGq22];
    j["other"] = out[QuadKind::kOther];
    c.details()[g.name()] = j;
    return out;
  };
  auto h3_quads = census(h3);
  auto dsp_quads = census(dsp);
  c.Expect(dsp_quads[QuadKind::kGq22] > 0 && dsp_quads[QuadKind::kGrid21] == 0,
           "dsp62 quads are not all (2,2)-GQs");
  c.Expect(h3_quads[QuadKind::kGrid21] > 0 && h3_quads[QuadKind::kGq22] > 0,
           "h3 lacks grid or (2,2) quads");
}

void DeBruynTriads(Checker& c) {
  const CheckEntry e = DeBruynTriadEntry();
  c.details() = e.counts;
  c.details()["examples"] = e.witnesses;
}

struct CriterionSpec {
  const char* title;
  double limit_seconds;
  bool informational;
  void (*run)(Checker&);
};

const CriterionSpec kCriteria[kCriterionCount] = {
    {"W(2): 15 points, 15 lines, order (2,2), self-dual", 1, false, W2Model},
    {"W(2) triads: |T^perp| in {1,3}, 20/60 split, grids and complete "
     "triads unique",
     1, false, Triads},
    {"pair construction: slim dense near hexagon (105, t=5, t2={1,2})", 5,
     false, H3Parameters},
    {"extended construction: slim dense near hexagon (135, t=6, t2={2})", 10,
     false, DspParameters},
    {"pair geometry case analysis A1-A4 over all 5460 pairs", 5, false,
     H3Cases},
    {"extended geometry case analysis B1-B7 and line checks", 10, false,
     DspCases},
    {"pair points form a geometric hyperplane of dsp62", 1, false,
     Hyperplane},
    {"h3 models pairwise isomorphic, h3 not isomorphic to dsp62", 60, false,
     Isomorphisms},
    {"quads: dsp62 all (2,2); h3 has grids and (2,2) quads", 30, false,
     Quads},
    {"ordered-pair model: kind of the primed triads of type (iv) lines", 0,
     true, DeBruynTriads},
};

}  // namespace

CriterionResult RunCriterion(int id) {
  if (id < 1 || id > kCriterionCount) {
    throw std::out_of_range("criterion id " + std::to_string(id));
  }
  const CriterionSpec& spec = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  r.limit_seconds = spec.limit_seconds;
  r.informational = spec.informational;
  Checker checker(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(checker);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
    r.failures.push_back("runtime limit exceeded");
  }
  r.passed = r.failures.empty();
  return r;
}

std::vector<CriterionResult> RunAcceptanceSuite() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(RunCriterion(id));
  return out;
}

std::string FormatCriterionLine(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "(%.3f s, limit %g s)", r.seconds,
                  r.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "(%.3f s)", r.seconds);
  }
  std::string tag = r.informational ? "[INFO]" : (r.passed ? "[PASS]" : "[FAIL]");
  std::string line = tag + " " + (r.id < 10 ? " " : "") + std::to_string(r.id) +
                     "  " + r.title + "  " + timing;
  for (const std::string& f : r.failures) line += "\n         - " + f;
  return line;
}

OrderedJson AcceptanceToJson(const std::vector<CriterionResult>& results) {
  OrderedJson criteria = OrderedJson::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    OrderedJson j;
    j["criterion"] = r.id;
    j["title"] = r.title;
    j["verdict"] = r.informational ? "info" : (r.passed ? "pass" : "fail");
    j["limit_seconds"] = r.limit_seconds;
    j["details"] = r.details;
    j["failures"] = r.failures;
    criteria.push_back(std::move(j));
    all = all && r.passed;
  }
  OrderedJson doc;
  doc["verdict"] = all ? "pass" : "fail";
  doc["criteria"] = std::move(criteria);
  return doc;
}

}  // namespace nearhex
