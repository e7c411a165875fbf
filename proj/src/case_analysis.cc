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

#include <algorithm>
#include <sstream>
#include <variant>

namespace nearhex {
namespace {

// Collects reports in a fixed order and finalizes witness lists.
class Reports {
 public:
  CaseReport& Add(std::string id, std::string expectation) {
    CaseReport r;
    r.id = std::move(id);
    r.expectation = std::move(expectation);
    reports_.push_back(std::move(r));
    return reports_.back();
  }
  CaseReport& Get(const std::string& id) {
    for (CaseReport& r : reports_) {
      if (r.id == id) return r;
    }
    throw std::logic_error("unknown case id " + id);
  }
  std::vector<CaseReport> Finish() {
    for (CaseReport& r : reports_) {
      std::sort(r.witnesses.begin(), r.witnesses.end());
      r.witnesses.erase(std::unique(r.witnesses.begin(), r.witnesses.end()),
                        r.witnesses.end());
      if (r.witnesses.size() > kMaxWitnesses) r.witnesses.resize(kMaxWitnesses);
    }
    return std::move(reports_);
  }

 private:
  std::vector<CaseReport> reports_;
};

void Fail(CaseReport& r, std::string witness) {
  r.ok = false;
  r.witnesses.push_back(std::move(witness));
}

std::string PairText(const Geometry& g, int a, int b) {
  return g.PointName(a) + " " + g.PointName(b);
}

const PairLabel& PairOf(const Geometry& g, int p) {
  const auto* label = std::get_if<PairLabel>(&g.label(p));
  if (label == nullptr) {
    throw std::invalid_argument("point " + g.PointName(p) +
                                " is not a pair point");
  }
  return *label;
}

bool PairsCollinearByLabel(const PairLabel& a, const PairLabel& b) {
  return a.x != b.x && a.u != b.u && InW2Perp(b.x, a.u) && InW2Perp(a.x, b.u);
}

// A case of two distinct, label-non-collinear pair points.
std::string PairCase(const PairLabel& a, const PairLabel& b) {
  if (a.x == b.x) return "A1";
  if (a.u == b.u) return "A2";
  const bool u_in = InW2Perp(b.x, a.u);
  const bool v_in = InW2Perp(a.x, b.u);
  if (!u_in && !v_in) return "A3";
  return "A4";
}

void Record(CaseReport& r, int common, int dist) {
  ++r.count;
  ++r.common_neighbours[common];
  ++r.distances[dist];
}

void CheckCommon(CaseReport& r, const Geometry& g, int a, int b, int common,
                 int at_least, int at_most) {
  if (common < at_least || common > at_most) {
    Fail(r, PairText(g, a, b) + ": " + std::to_string(common) +
                " common neighbours");
  }
}

void CheckDistance(CaseReport& r, const Geometry& g, int a, int b, int dist,
                   int expected) {
  if (dist != expected) {
    Fail(r, PairText(g, a, b) + ": distance " + std::to_string(dist));
  }
}

void CheckCollinearity(CaseReport& r, const Geometry& g, int a, int b,
                       bool by_label) {
  const bool by_lines = g.Collinear(a, b);
  if (by_label || by_lines) ++r.count;
  if (by_label != by_lines) {
    Fail(r, PairText(g, a, b) + (by_label ? ": label rule says collinear"
                                          : ": collinear but label rule "
                                            "disagrees"));
  }
}

std::string Pattern(std::array<int, 3> d) {
  std::sort(d.begin(), d.end());
  std::string s;
  for (int x : d) s += x == kUnreachable ? "-" : std::to_string(x);
  return s;
}

// "two at distance 2 => third collinear" and "two at distance 3 => third at
// distance 2" for the given lines seen from the given points.
void LineDistanceChecks(const Geometry& g, const DistanceMatrix& dm,
                        const std::vector<int>& lines, const PointSet& from,
                        CaseReport& dist2, CaseReport& dist3) {
  for (int l : lines) {
    const Line& line = g.line(l);
    if (line.size() != 3) {
      Fail(dist2, "line " + std::to_string(l) + " is not of size 3");
      continue;
    }
    from.ForEach([&](int x) {
      if (g.line_set(l).Contains(x)) return;
      const std::array<int, 3> d = {dm(x, line[0]), dm(x, line[1]),
                                    dm(x, line[2])};
      const std::string pattern = Pattern(d);
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (d[j] == 2 && d[k] == 2) {
          ++dist2.count;
          ++dist2.patterns[pattern];
          if (d[i] != 1) {
            Fail(dist2, g.PointName(x) + " vs line " + std::to_string(l) +
                            ": " + pattern);
          }
        }
        if (d[j] == 3 && d[k] == 3) {
          ++dist3.count;
          ++dist3.patterns[pattern];
          if (d[i] != 2) {
            Fail(dist3, g.PointName(x) + " vs line " + std::to_string(l) +
                            ": " + pattern);
          }
        }
      }
    });
  }
}

}  // namespace

std::vector<CaseReport> H3CaseAnalysis(const Geometry& g) {
  if (!g.has_labels()) throw std::invalid_argument("pair labels required");
  for (int p = 0; p < g.point_count(); ++p) PairOf(g, p);
  const DistanceMatrix dm(g);

  Reports reports;
  reports.Add("collinear", "collinear iff x!=y, u'!=v', u' in y'^perp, "
                           "v' in x'^perp");
  reports.Add("A1", "exactly 2 common neighbours");
  reports.Add("A2", "exactly 2 common neighbours");
  reports.Add("A3", "exactly 3 common neighbours");
  reports.Add("A4", "distance 3");
  reports.Add("line-dist2", "distance 2 from two points => collinear with "
                            "the third");
  reports.Add("line-dist3", "distance 3 from two points => distance 2 from "
                            "the third");

  for (int a = 0; a < g.point_count(); ++a) {
    for (int b = a + 1; b < g.point_count(); ++b) {
      const PairLabel& la = PairOf(g, a);
      const PairLabel& lb = PairOf(g, b);
      const bool by_label = PairsCollinearByLabel(la, lb);
      if (by_label || g.Collinear(a, b)) {
        CheckCollinearity(reports.Get("collinear"), g, a, b, by_label);
        continue;
      }
      const std::string id = PairCase(la, lb);
      CaseReport& r = reports.Get(id);
      const int common = (g.neighbours(a) & g.neighbours(b)).Size();
      const int dist = dm(a, b);
      Record(r, common, dist);
      if (id == "A1" || id == "A2") {
        CheckCommon(r, g, a, b, common, 2, 2);
        CheckDistance(r, g, a, b, dist, 2);
      } else if (id == "A3") {
        CheckCommon(r, g, a, b, common, 3, 3);
        CheckDistance(r, g, a, b, dist, 2);
      } else {
        CheckDistance(r, g, a, b, dist, 3);
      }
    }
  }

  std::vector<int> all_lines(g.line_count());
  for (int l = 0; l < g.line_count(); ++l) all_lines[l] = l;
  LineDistanceChecks(g, dm, all_lines, g.AllPoints(),
                     reports.Get("line-dist2"), reports.Get("line-dist3"));
  return reports.Finish();
}

std::vector<CaseReport> DspCaseAnalysis(const Geometry& g,
                                        const PointSet& h3_points) {
  if (!g.has_labels()) throw std::invalid_argument("labels required");
  enum class Side { kP, kPrimed, kPair };
  std::vector<Side> side(g.point_count());
  std::vector<Edge> edge(g.point_count());
  for (int p = 0; p < g.point_count(); ++p) {
    const LabeledPoint& label = g.label(p);
    if (h3_points.Contains(p)) {
      PairOf(g, p);
      side[p] = Side::kPair;
    } else if (const auto* e = std::get_if<EdgeLabel>(&label)) {
      side[p] = Side::kP;
      edge[p] = e->edge;
    } else if (const auto* e = std::get_if<PrimedEdgeLabel>(&label)) {
      side[p] = Side::kPrimed;
      edge[p] = e->edge;
    } else {
      throw std::invalid_argument("point " + g.PointName(p) +
                                  " is neither a pair nor in P or P'");
    }
  }
  const DistanceMatrix dm(g);

  Reports reports;
  reports.Add("collinear", "label collinearity rule agrees with the lines");
  const char* kAtLeastThree = "at least 3 common neighbours";
  const char* kDistanceThree = "distance 3";
  reports.Add("B1", kAtLeastThree);
  reports.Add("B2", kAtLeastThree);
  reports.Add("B3", kDistanceThree);
  reports.Add("B4", kAtLeastThree);
  reports.Add("B5", kAtLeastThree);
  reports.Add("B6", kDistanceThree);
  reports.Add("B7", kDistanceThree);
  reports.Add("inner-A1", "exactly 3 common neighbours");
  reports.Add("inner-A2", "exactly 3 common neighbours");
  reports.Add("inner-A3", "exactly 3 common neighbours");
  reports.Add("inner-A4", kDistanceThree);
  reports.Add("l1-nearest", "unique nearest point on every line through P "
                            "and P'");
  reports.Add("pair-line-dist2", "distance 2 from two points => collinear "
                                 "with the third");
  reports.Add("pair-line-dist3", "distance 3 from two points => distance 2 "
                                 "from the third");

  for (int a = 0; a < g.point_count(); ++a) {
    for (int b = a + 1; b < g.point_count(); ++b) {
      // Order so that alpha is in P, then P', then the pair points.
      int alpha = a, beta = b;
      if (side[beta] < side[alpha]) std::swap(alpha, beta);
      const Side sa = side[alpha], sb = side[beta];
      bool by_label = false;
      std::string id;
      if (sa == Side::kPair) {
        const PairLabel& la = PairOf(g, alpha);
        const PairLabel& lb = PairOf(g, beta);
        by_label = PairsCollinearByLabel(la, lb);
        if (!by_label) id = "inner-" + PairCase(la, lb);
      } else if (sa == sb) {
        id = sa == Side::kP ? "B1" : "B2";
      } else if (sb == Side::kPrimed) {
        by_label = InW2Perp(edge[alpha], edge[beta]);
        id = "B3";
      } else {
        const PairLabel& lb = PairOf(g, beta);
        if (sa == Side::kP) {
          by_label = edge[alpha] == lb.x;
          id = InW2Perp(edge[alpha], lb.u) ? "B4" : "B6";
        } else {
          by_label = edge[alpha] == lb.u;
          id = InW2Perp(edge[alpha], lb.x) ? "B5" : "B7";
        }
      }
      if (by_label || g.Collinear(alpha, beta)) {
        CheckCollinearity(reports.Get("collinear"), g, alpha, beta, by_label);
        continue;
      }
      CaseReport& r = reports.Get(id);
      const int common = (g.neighbours(alpha) & g.neighbours(beta)).Size();
      const int dist = dm(alpha, beta);
      Record(r, common, dist);
      if (r.expectation == kDistanceThree) {
        CheckDistance(r, g, alpha, beta, dist, 3);
      } else if (id.starts_with("inner-")) {
        CheckCommon(r, g, alpha, beta, common, 3, 3);
        CheckDistance(r, g, alpha, beta, dist, 2);
      } else {
        CheckCommon(r, g, alpha, beta, common, 3, g.point_count());
        CheckDistance(r, g, alpha, beta, dist, 2);
      }
    }
  }

  const PointSet outside = g.AllPoints() - h3_points;
  std::vector<int> pair_lines;
  CaseReport& nearest = reports.Get("l1-nearest");
  for (int l = 0; l < g.line_count(); ++l) {
    if (g.line_set(l).IsSubsetOf(h3_points)) {
      pair_lines.push_back(l);
      continue;
    }
    const Line& line = g.line(l);
    for (int x = 0; x < g.point_count(); ++x) {
      if (g.line_set(l).Contains(x)) continue;
      std::array<int, 3> d{};
      for (size_t i = 0; i < 3 && i < line.size(); ++i) d[i] = dm(x, line[i]);
      const int best = *std::min_element(d.begin(), d.end());
      ++nearest.count;
      ++nearest.patterns[Pattern(d)];
      if (line.size() != 3 || std::count(d.begin(), d.end(), best) != 1) {
        Fail(nearest, g.PointName(x) + " vs line " + std::to_string(l) +
                          ": " + Pattern(d));
      }
    }
  }
  LineDistanceChecks(g, dm, pair_lines, outside,
                     reports.Get("pair-line-dist2"),
                     reports.Get("pair-line-dist3"));
  return reports.Finish();
}

}  // namespace nearhex
