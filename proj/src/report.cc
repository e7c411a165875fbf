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

#include "nearhex/report.h"

#include <algorithm>
#include <map>
#include <type_traits>

#include "nearhex/builders.h"
#include "nearhex/verify.h"

namespace nearhex {
namespace {

CheckEntry NewEntry(std::string check, std::string geometry) {
  CheckEntry e;
  e.check = std::move(check);
  e.geometry = std::move(geometry);
  return e;
}

void AddWitness(CheckEntry& e, std::string w) {
  e.witnesses.push_back(std::move(w));
}

void Finish(CheckEntry& e) {
  std::sort(e.witnesses.begin(), e.witnesses.end());
  e.witnesses.erase(std::unique(e.witnesses.begin(), e.witnesses.end()),
                    e.witnesses.end());
  if (e.witnesses.size() > kMaxWitnesses) e.witnesses.resize(kMaxWitnesses);
}

template <typename Map>
OrderedJson Histogram(const Map& m) {
  OrderedJson out = OrderedJson::object();
  for (const auto& [key, count] : m) {
    if constexpr (std::is_same_v<typename Map::key_type, std::string>) {
      out[key] = count;
    } else {
      out[std::to_string(key)] = count;
    }
  }
  return out;
}

bool IsH3Model(std::string_view model) {
  return model == "h3" || model == "h3-partition" || model == "h3-debruyn";
}

}  // namespace

OrderedJson EntryToJson(const CheckEntry& e) {
  OrderedJson j;
  j["check"] = e.check;
  j["geometry"] = e.geometry;
  j["verdict"] = e.passed ? "pass" : "fail";
  j["counts"] = e.counts;
  j["witnesses"] = e.witnesses;
  return j;
}

OrderedJson ReportToJson(const std::vector<CheckEntry>& entries) {
  OrderedJson checks = OrderedJson::array();
  bool all = true;
  for (const CheckEntry& e : entries) {
    checks.push_back(EntryToJson(e));
    all = all && e.passed;
  }
  OrderedJson j;
  j["verdict"] = all ? "pass" : "fail";
  j["checks"] = std::move(checks);
  return j;
}

bool IsCheckName(std::string_view name) {
  return std::find(kCheckNames.begin(), kCheckNames.end(), name) !=
         kCheckNames.end();
}

std::vector<std::string> ApplicableChecks(std::string_view model) {
  std::vector<std::string> out = {"pls", "np", "dense", "params", "quads"};
  if (model == "h3" || model == "dsp62") out.push_back("cases");
  if (model == "dsp62") out.push_back("hyperplane");
  return out;
}

std::optional<ExpectedParameters> ExpectedParametersFor(
    std::string_view model) {
  if (model == "w2") return ExpectedParameters{15, 15, {3}, {3}, {2}, 2};
  if (IsH3Model(model)) {
    return ExpectedParameters{105, 210, {3}, {6}, {1, 2}, 3};
  }
  if (model == "dsp62") return ExpectedParameters{135, 315, {3}, {7}, {2}, 3};
  return std::nullopt;
}

CheckEntry PlsEntry(const Geometry& g) {
  CheckEntry e = NewEntry("pls", g.name());
  const PlsVerdict v = ValidatePls(g);
  e.passed = v.ok;
  e.counts["points"] = g.point_count();
  e.counts["lines"] = g.line_count();
  e.counts["shared_pairs"] = v.shared_pairs.size();
  e.counts["short_lines"] = v.short_lines.size();
  for (const auto& [a, b] : v.shared_pairs) {
    AddWitness(e, g.PointName(a) + " " + g.PointName(b));
  }
  Finish(e);
  return e;
}

CheckEntry NpEntry(const Geometry& g) {
  CheckEntry e = NewEntry("np", g.name());
  const DistanceMatrix dm(g);
  e.counts["connected"] = dm.connected();
  if (!dm.connected()) {
    AddWitness(e, "geometry is disconnected");
    return e;
  }
  const NpVerdict v = CheckNp(g, dm);
  e.passed = v.ok;
  e.counts["point_line_pairs"] = v.checked_pairs;
  e.counts["diameter"] = dm.diameter();
  if (!v.ok) {
    AddWitness(e, "point " + g.PointName(v.witness_point) + " vs line " +
                      std::to_string(v.witness_line));
  }
  return e;
}

CheckEntry DenseEntry(const Geometry& g) {
  CheckEntry e = NewEntry("dense", g.name());
  const DistanceMatrix dm(g);
  long pairs = 0;
  std::map<int, long> common_hist;
  for (int a = 0; a < g.point_count(); ++a) {
    dm.Sphere(a, 2).ForEach([&](int b) {
      if (b <= a) return;
      ++pairs;
      const int common = (g.neighbours(a) & g.neighbours(b)).Size();
      ++common_hist[common];
      if (common < 2) {
        AddWitness(e, g.PointName(a) + " " + g.PointName(b) + ": " +
                          std::to_string(common) + " common neighbours");
      }
    });
  }
  e.passed = e.witnesses.empty();
  e.counts["distance2_pairs"] = pairs;
  e.counts["common_neighbours"] = Histogram(common_hist);
  Finish(e);
  return e;
}

CheckEntry ParamsEntry(const Geometry& g, const ExpectedParameters& expected) {
  CheckEntry e = NewEntry("params", g.name());
  const ParameterSummary s = ComputeParameters(g);
  e.counts["v"] = s.v;
  e.counts["lines"] = s.line_count;
  e.counts["line_sizes"] = s.line_sizes;
  e.counts["lines_per_point"] = s.lines_per_point;
  e.counts["t2_values"] = s.t2_values;
  e.counts["diameter"] = s.diameter;
  e.counts["connected"] = s.connected;
  e.counts["dense"] = s.dense;
  e.counts["slim"] = s.slim;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) AddWitness(e, what);
  };
  expect(s.v == expected.v, "v = " + std::to_string(s.v));
  expect(s.line_count == expected.lines,
         "lines = " + std::to_string(s.line_count));
  expect(s.line_sizes == expected.line_sizes, "unexpected line sizes");
  expect(s.lines_per_point == expected.lines_per_point,
         "unexpected lines per point");
  expect(s.t2_values == expected.t2_values, "unexpected t2 values");
  expect(s.diameter == expected.diameter,
         "diameter = " + std::to_string(s.diameter));
  expect(s.connected, "disconnected");
  expect(s.dense, "not dense");
  e.passed = e.witnesses.empty();
  Finish(e);
  return e;
}

CheckEntry QuadsEntry(const Geometry& g, std::string_view model) {
  CheckEntry e = NewEntry("quads", g.name());
  const std::vector<QuadRecord> quads = EnumerateQuads(g);
  std::map<int, long> sizes;
  long grid = 0, gq = 0, other = 0;
  for (const QuadRecord& q : quads) {
    ++sizes[q.points.Size()];
    switch (q.kind) {
      case QuadKind::kGrid21:
        ++grid;
        break;
      case QuadKind::kGq22:
        ++gq;
        break;
      case QuadKind::kOther:
        ++other;
        AddWitness(e, q.witness);
        break;
    }
  }
  e.counts["quads"] = quads.size();
  e.counts["grid21"] = grid;
  e.counts["gq22"] = gq;
  e.counts["other"] = other;
  e.counts["sizes"] = Histogram(sizes);
  bool ok = other == 0;
  if (model == "dsp62") {
    ok = ok && grid == 0 && gq > 0;
  } else if (IsH3Model(model)) {
    ok = ok && grid > 0 && gq > 0;
  } else if (model == "w2") {
    ok = ok && quads.size() == 1 && quads[0].points == g.AllPoints();
  }
  e.passed = ok;
  Finish(e);
  return e;
}

CheckEntry HyperplaneEntry(const Geometry& dsp) {
  CheckEntry e = NewEntry("hyperplane", dsp.name());
  const PointSet pairs = PairPoints(dsp);
  std::map<int, long> meets;
  for (int l = 0; l < dsp.line_count(); ++l) {
    ++meets[(dsp.line_set(l) & pairs).Size()];
  }
  e.counts["hyperplane_points"] = pairs.Size();
  e.counts["subspace"] = IsSubspace(dsp, pairs);
  e.counts["line_meets"] = Histogram(meets);
  e.passed = IsGeometricHyperplane(dsp, pairs);
  if (!e.passed) AddWitness(e, "pair points are not a geometric hyperplane");
  return e;
}

std::vector<CheckEntry> CaseEntries(const Geometry& g,
                                    const std::vector<CaseReport>& reports) {
  std::vector<CheckEntry> out;
  for (const CaseReport& r : reports) {
    CheckEntry e = NewEntry("cases." + r.id, g.name());
    e.passed = r.ok;
    e.counts["expectation"] = r.expectation;
    e.counts["count"] = r.count;
    if (!r.common_neighbours.empty()) {
      e.counts["common_neighbours"] = Histogram(r.common_neighbours);
    }
    if (!r.distances.empty()) e.counts["distances"] = Histogram(r.distances);
    if (!r.patterns.empty()) e.counts["patterns"] = Histogram(r.patterns);
    e.witnesses = r.witnesses;
    out.push_back(std::move(e));
  }
  return out;
}

CheckEntry DeBruynTriadEntry() {
  const DeBruynModel model = BuildH3DeBruynDetailed();
  const Geometry w2 = BuildW2();
  CheckEntry e = NewEntry("debruyn-primed-triads", model.geometry.name());
  long complete = 0, incomplete = 0, other = 0;
  for (const DeBruynTypeIv& rec : model.type_iv) {
    switch (rec.primed_kind) {
      case TriadKind::kComplete:
        ++complete;
        AddWitness(e, "{" + w2.PointName(rec.primed[0]) + "," +
                          w2.PointName(rec.primed[1]) + "," +
                          w2.PointName(rec.primed[2]) + "} is complete");
        break;
      case TriadKind::kIncomplete:
        ++incomplete;
        break;
      case TriadKind::kOther:
        ++other;
        break;
    }
  }
  e.counts["type_iv_lines"] = model.type_iv.size();
  e.counts["complete"] = complete;
  e.counts["incomplete"] = incomplete;
  e.counts["other"] = other;
  e.counts["claimed_kind"] = "incomplete";
  e.counts["claim_agrees"] =
      complete == 0 && other == 0 ? "all" : (incomplete == 0 ? "none"
                                                             : "partial");
  e.passed = true;
  Finish(e);
  return e;
}

std::vector<CheckEntry> RunChecks(const Geometry& g, std::string_view model,
                                  const std::vector<std::string>& checks) {
  const auto applicable = ApplicableChecks(model);
  for (const std::string& c : checks) {
    if (!IsCheckName(c)) throw std::invalid_argument("unknown check: " + c);
    if (std::find(applicable.begin(), applicable.end(), c) ==
        applicable.end()) {
      throw std::invalid_argument("check " + c + " does not apply to model " +
                                  std::string(model));
    }
  }
  std::vector<CheckEntry> out;
  for (const std::string& c : checks) {
    if (c == "pls") {
      out.push_back(PlsEntry(g));
    } else if (c == "np") {
      out.push_back(NpEntry(g));
    } else if (c == "dense") {
      out.push_back(DenseEntry(g));
    } else if (c == "params") {
      const auto expected = ExpectedParametersFor(model);
      if (!expected) throw std::invalid_argument("no parameters for model");
      out.push_back(ParamsEntry(g, *expected));
    } else if (c == "quads") {
      out.push_back(QuadsEntry(g, model));
    } else if (c == "cases") {
      const auto reports = model == "dsp62"
                               ? DspCaseAnalysis(g, PairPoints(g))
                               : H3CaseAnalysis(g);
      for (CheckEntry& e : CaseEntries(g, reports)) out.push_back(std::move(e));
    } else if (c == "hyperplane") {
      out.push_back(HyperplaneEntry(g));
    }
  }
  return out;
}

}  // namespace nearhex
