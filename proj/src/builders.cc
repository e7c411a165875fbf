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

#include "nearhex/builders.h"

#include <algorithm>
#include <map>

namespace nearhex {
namespace {

constexpr int kH3Points = 105;
constexpr int kH3Lines = 210;
constexpr int kDspPoints = 135;
constexpr int kDspLines = 315;

void ExpectCount(const char* what, int actual, int expected) {
  if (actual != expected) {
    throw ConsistencyError(std::string(what) + ": expected " +
                           std::to_string(expected) + ", got " +
                           std::to_string(actual));
  }
}

// Base triples of S: its lines followed by its complete triads.
std::vector<std::array<int, 3>> LinesAndCompleteTriads(const Geometry& w2) {
  std::vector<std::array<int, 3>> out;
  for (const Line& l : w2.lines()) out.push_back({l[0], l[1], l[2]});
  for (const Triad& t : EnumerateTriads(w2, TriadMode::kPoint)) {
    if (t.kind == TriadKind::kComplete) out.push_back(t.elements);
  }
  return out;
}

}  // namespace

Geometry BuildH3() {
  const Geometry w2 = BuildW2();
  std::map<std::pair<int, int>, int> index;
  std::vector<LabeledPoint> labels;
  for (int x = 0; x < kW2Size; ++x) {
    Perp(w2, PointSet{x}).ForEach([&](int u) {
      index[{x, u}] = static_cast<int>(labels.size());
      labels.push_back(PairLabel{EdgeAt(x), EdgeAt(u)});
    });
  }
  ExpectCount("pair points", static_cast<int>(labels.size()), kH3Points);

  const auto triples = LinesAndCompleteTriads(w2);
  ExpectCount("base triples", static_cast<int>(triples.size()), 35);
  std::vector<Line> lines;
  for (const auto& t : triples) {
    std::vector<int> image = Perp(w2, PointSet{t[0], t[1], t[2]}).ToVector();
    ExpectCount("perp of base triple", static_cast<int>(image.size()), 3);
    do {
      Line line;
      for (int i = 0; i < 3; ++i) {
        auto it = index.find({t[i], image[i]});
        if (it == index.end()) {
          throw ConsistencyError("candidate line contains a non-point (" +
                                 RenderLabel(EdgeLabel{EdgeAt(t[i])}) + "," +
                                 RenderLabel(PrimedEdgeLabel{
                                     EdgeAt(image[i])}) + ")");
        }
        line.push_back(it->second);
      }
      lines.push_back(std::move(line));
    } while (std::next_permutation(image.begin(), image.end()));
  }
  CanonicalLines canon = CanonicalizeLines(std::move(lines));
  ExpectCount("duplicate pair lines", canon.duplicates_removed, 0);
  ExpectCount("pair lines", static_cast<int>(canon.lines.size()), kH3Lines);
  return Geometry(kH3Points, std::move(canon.lines), std::move(labels), "h3");
}

Geometry BuildDsp62(const Geometry& h3) {
  if (h3.point_count() != kH3Points || h3.line_count() != kH3Lines ||
      !h3.has_labels()) {
    throw std::invalid_argument("dsp62 needs the 105-point pair geometry");
  }
  std::vector<LabeledPoint> labels = h3.labels();
  for (int i = 0; i < kW2Size; ++i) labels.push_back(EdgeLabel{EdgeAt(i)});
  for (int i = 0; i < kW2Size; ++i) {
    labels.push_back(PrimedEdgeLabel{EdgeAt(i)});
  }
  std::vector<Line> lines = h3.lines();
  for (int p = 0; p < kH3Points; ++p) {
    const auto* pair = std::get_if<PairLabel>(&h3.label(p));
    if (pair == nullptr || !InW2Perp(pair->x, pair->u)) {
      throw std::invalid_argument("dsp62: point " + std::to_string(p) +
                                  " is not a valid pair point");
    }
    lines.push_back({kH3Points + EdgeIndex(pair->x), p,
                     kH3Points + kW2Size + EdgeIndex(pair->u)});
  }
  Geometry g(kDspPoints, std::move(lines), std::move(labels), "dsp62");
  ExpectCount("dsp62 lines", g.line_count(), kDspLines);
  return g;
}

PointSet PairPoints(const Geometry& g) {
  PointSet out;
  if (!g.has_labels()) return out;
  for (int p = 0; p < g.point_count(); ++p) {
    if (std::holds_alternative<PairLabel>(g.label(p))) out.Insert(p);
  }
  return out;
}

namespace {

void Matchings(int used, std::vector<Edge>& prefix,
               std::vector<PartitionLabel>& out) {
  int first = 1;
  while (first <= 8 && (used >> first) & 1) ++first;
  if (first > 8) {
    PartitionLabel p;
    std::copy(prefix.begin(), prefix.end(), p.blocks.begin());
    out.push_back(p);
    return;
  }
  for (int other = first + 1; other <= 8; ++other) {
    if ((used >> other) & 1) continue;
    prefix.push_back(Edge{first, other});
    Matchings(used | (1 << first) | (1 << other), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Geometry BuildH3Partitions() {
  std::vector<PartitionLabel> parts;
  std::vector<Edge> prefix;
  Matchings(0, prefix, parts);
  std::sort(parts.begin(), parts.end());
  ExpectCount("partitions", static_cast<int>(parts.size()), kH3Points);

  // Partitions containing a given block, by block.
  std::map<Edge, PointSet> containing;
  for (int p = 0; p < kH3Points; ++p) {
    for (Edge b : parts[p].blocks) containing[b].Insert(p);
  }
  std::vector<Line> lines;
  for (const PartitionLabel& part : parts) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const PointSet shared =
            containing[part.blocks[i]] & containing[part.blocks[j]];
        ExpectCount("partitions sharing two blocks", shared.Size(), 3);
        lines.push_back(shared.ToVector());
      }
    }
  }
  CanonicalLines canon = CanonicalizeLines(std::move(lines));
  ExpectCount("partition lines", static_cast<int>(canon.lines.size()),
              kH3Lines);
  std::vector<LabeledPoint> labels(parts.begin(), parts.end());
  return Geometry(kH3Points, std::move(canon.lines), std::move(labels),
                  "h3-partition");
}

DeBruynModel BuildH3DeBruynDetailed() {
  const Geometry w2 = BuildW2();
  std::map<std::pair<int, int>, int> index;
  std::vector<LabeledPoint> labels;
  for (int x = 0; x < kW2Size; ++x) {
    for (int y = 0; y < kW2Size; ++y) {
      if (x != y && !w2.Collinear(x, y)) continue;
      index[{x, y}] = static_cast<int>(labels.size());
      labels.push_back(OrderedPairLabel{EdgeAt(x), EdgeAt(y)});
    }
  }
  ExpectCount("ordered pair points", static_cast<int>(labels.size()),
              kH3Points);
  auto at = [&](int x, int y) { return index.at({x, y}); };

  std::array<std::vector<Line>, 4> by_type;
  for (const Line& l : w2.lines()) {
    const int x = l[0], y = l[1], z = l[2];
    by_type[0].push_back({at(x, x), at(y, y), at(z, z)});
    for (int r = 0; r < 3; ++r) {
      const int a = l[r], b = l[(r + 1) % 3], c = l[(r + 2) % 3];
      by_type[1].push_back({at(a, a), at(a, b), at(a, c)});
    }
    by_type[2].push_back({at(x, y), at(y, z), at(z, x)});
    by_type[2].push_back({at(x, z), at(z, y), at(y, x)});
  }

  DeBruynModel model;
  for (const Triad& t : EnumerateTriads(w2, TriadMode::kLine)) {
    if (t.kind != TriadKind::kIncomplete) continue;
    const int centre = t.perp.First();
    const PointSet& l = w2.line_set(centre);
    std::array<int, 3> meet{};
    for (int i = 0; i < 3; ++i) {
      const PointSet m = w2.line_set(t.elements[i]) & l;
      ExpectCount("meet of triad line with centre", m.Size(), 1);
      meet[i] = m.First();
    }
    const PointSet k_rest = w2.line_set(t.elements[0]) - PointSet{meet[0]};
    k_rest.ForEach([&](int x_prime) {
      DeBruynTypeIv rec;
      rec.triad_lines = t.elements;
      rec.centre_line = centre;
      rec.on_centre = meet;
      rec.primed[0] = x_prime;
      for (int i = 1; i < 3; ++i) {
        const PointSet rest = w2.line_set(t.elements[i]) - PointSet{meet[i]} -
                              w2.neighbours(x_prime) - PointSet{x_prime};
        ExpectCount("partner points not collinear with x'", rest.Size(), 1);
        rec.primed[i] = rest.First();
      }
      const auto& p = rec.primed;
      if (w2.Collinear(p[0], p[1]) || w2.Collinear(p[1], p[2]) ||
          w2.Collinear(p[0], p[2])) {
        throw ConsistencyError("primed points of a type (iv) line are not a "
                               "triad");
      }
      rec.primed_kind = MakeTriad(w2, p[0], p[1], p[2]).kind;
      rec.line = {at(meet[0], p[0]), at(meet[1], p[1]), at(meet[2], p[2])};
      by_type[3].push_back(rec.line);
      std::sort(rec.line.begin(), rec.line.end());
      model.type_iv.push_back(std::move(rec));
    });
  }

  std::vector<Line> all;
  for (int i = 0; i < 4; ++i) {
    CanonicalLines canon = CanonicalizeLines(by_type[i]);
    model.type_counts[i] = static_cast<int>(canon.lines.size());
    all.insert(all.end(), canon.lines.begin(), canon.lines.end());
  }
  ExpectCount("type (i) lines", model.type_counts[0], 15);
  ExpectCount("type (ii) lines", model.type_counts[1], 45);
  ExpectCount("type (iii) lines", model.type_counts[2], 30);
  ExpectCount("type (iv) lines", model.type_counts[3], 120);
  CanonicalLines canon = CanonicalizeLines(std::move(all));
  ExpectCount("lines shared between types", canon.duplicates_removed, 0);
  model.geometry = Geometry(kH3Points, std::move(canon.lines),
                            std::move(labels), "h3-debruyn");
  return model;
}

Geometry BuildH3DeBruyn() { return BuildH3DeBruynDetailed().geometry; }

bool IsModelName(std::string_view name) {
  return std::find(kModelNames.begin(), kModelNames.end(), name) !=
         kModelNames.end();
}

Geometry BuildModel(std::string_view name) {
  if (name == "w2") return BuildW2();
  if (name == "h3") return BuildH3();
  if (name == "h3-partition") return BuildH3Partitions();
  if (name == "h3-debruyn") return BuildH3DeBruyn();
  if (name == "dsp62") return BuildDsp62(BuildH3());
  throw std::invalid_argument("unknown model: " + std::string(name));
}

}  // namespace nearhex
