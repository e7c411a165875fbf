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

#include "nearhex/geometry.h"

#include <algorithm>
#include <deque>
#include <string>

namespace nearhex {

CanonicalLines CanonicalizeLines(std::vector<Line> lines) {
  for (Line& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  const size_t before = lines.size();
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  const int removed = static_cast<int>(before - lines.size());
  return {std::move(lines), removed};
}

Geometry::Geometry(int point_count, std::vector<Line> lines,
                   std::vector<LabeledPoint> labels, std::string name)
    : point_count_(point_count),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  if (point_count < 0 || point_count > kMaxPoints) {
    throw std::invalid_argument("point count out of range: " +
                                std::to_string(point_count));
  }
  if (!labels_.empty() &&
      static_cast<int>(labels_.size()) != point_count) {
    throw std::invalid_argument("label table size does not match points");
  }
  for (const Line& l : lines) {
    if (l.size() < 2) throw std::invalid_argument("line with < 2 points");
    for (int p : l) {
      if (p < 0 || p >= point_count) {
        throw std::invalid_argument("point index out of range: " +
                                    std::to_string(p));
      }
    }
  }
  CanonicalLines canon = CanonicalizeLines(std::move(lines));
  if (canon.duplicates_removed > 0) {
    throw std::invalid_argument("duplicate lines");
  }
  lines_ = std::move(canon.lines);

  line_sets_.reserve(lines_.size());
  lines_through_.assign(point_count, {});
  neighbours_.assign(point_count, PointSet{});
  for (int i = 0; i < line_count(); ++i) {
    const Line& l = lines_[i];
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      throw std::invalid_argument("repeated point inside a line");
    }
    PointSet s = PointSet::FromVector(l);
    for (int p : l) {
      lines_through_[p].push_back(i);
      neighbours_[p] |= s;
    }
    line_sets_.push_back(s);
  }
  for (int p = 0; p < point_count; ++p) neighbours_[p].Erase(p);
}

int Geometry::LineThrough(int a, int b) const {
  for (int l : lines_through_.at(a)) {
    if (line_sets_[l].Contains(b)) return l;
  }
  return -1;
}

std::string Geometry::PointName(int p) const {
  return has_labels() ? RenderLabel(labels_.at(p)) : std::to_string(p);
}

std::optional<int> Geometry::FindPoint(const LabeledPoint& label) const {
  for (int p = 0; p < static_cast<int>(labels_.size()); ++p) {
    if (labels_[p] == label) return p;
  }
  return std::nullopt;
}

Geometry Geometry::Renamed(std::string name) const {
  Geometry copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

PlsVerdict ValidatePls(const Geometry& g) {
  PlsVerdict v;
  for (int l = 0; l < g.line_count(); ++l) {
    if (g.line(l).size() < 2) v.short_lines.push_back(l);
  }
  for (int a = 0; a < g.point_count(); ++a) {
    const auto& through = g.lines_through(a);
    for (int b = a + 1; b < g.point_count(); ++b) {
      int shared = 0;
      for (int l : through) shared += g.line_set(l).Contains(b) ? 1 : 0;
      if (shared > 1) v.shared_pairs.emplace_back(a, b);
    }
  }
  v.ok = v.shared_pairs.empty() && v.short_lines.empty();
  return v;
}

PointSet Perp(const Geometry& g, const PointSet& a) {
  if (a.Empty()) throw std::invalid_argument("perp of an empty set");
  PointSet result = g.AllPoints();
  bool in_range = true;
  a.ForEach([&](int x) {
    if (x >= g.point_count()) {
      in_range = false;
      return;
    }
    PointSet closed = g.neighbours(x);
    closed.Insert(x);
    result &= closed;
  });
  if (!in_range) throw std::invalid_argument("perp: point out of range");
  return result;
}

int ThirdPoint(const Geometry& g, int x, int y) {
  if (x < 0 || y < 0 || x >= g.point_count() || y >= g.point_count()) {
    throw std::invalid_argument("third point: index out of range");
  }
  if (!g.Collinear(x, y)) {
    throw std::invalid_argument("third point: " + g.PointName(x) + " and " +
                                g.PointName(y) + " are not collinear");
  }
  const Line& l = g.line(g.LineThrough(x, y));
  if (l.size() != 3) {
    throw std::invalid_argument("third point: line size is not 3");
  }
  for (int p : l) {
    if (p != x && p != y) return p;
  }
  throw ConsistencyError("third point: degenerate line");
}

DistanceTable Distances(const Geometry& g, int source) {
  if (source < 0 || source >= g.point_count()) {
    throw std::invalid_argument("distances: source out of range");
  }
  DistanceTable t{source, std::vector<int>(g.point_count(), kUnreachable)};
  PointSet visited{source};
  PointSet frontier{source};
  for (int d = 0; !frontier.Empty(); ++d) {
    PointSet next;
    frontier.ForEach([&](int p) {
      t.dist[p] = d;
      next |= g.neighbours(p);
    });
    next -= visited;
    visited |= next;
    frontier = next;
  }
  return t;
}

Metrics ComputeMetrics(const Geometry& g) {
  Metrics m;
  for (int p = 0; p < g.point_count(); ++p) {
    for (int d : Distances(g, p).dist) {
      if (d == kUnreachable) {
        m.connected = false;
      } else {
        m.diameter = std::max(m.diameter, d);
      }
    }
  }
  return m;
}

DistanceMatrix::DistanceMatrix(const Geometry& g)
    : n_(g.point_count()),
      dist_(static_cast<size_t>(n_) * n_, kUnreachable),
      spheres_(n_) {
  for (int s = 0; s < n_; ++s) {
    DistanceTable t = Distances(g, s);
    for (int p = 0; p < n_; ++p) {
      const int d = t.dist[p];
      dist_[s * n_ + p] = d;
      if (d == kUnreachable) {
        metrics_.connected = false;
        continue;
      }
      metrics_.diameter = std::max(metrics_.diameter, d);
      if (static_cast<int>(spheres_[s].size()) <= d) spheres_[s].resize(d + 1);
      spheres_[s][d].Insert(p);
    }
  }
}

const PointSet& DistanceMatrix::Sphere(int source, int k) const {
  const auto& layers = spheres_.at(source);
  if (k < 0 || k >= static_cast<int>(layers.size())) return empty_;
  return layers[k];
}

PointSet DistanceMatrix::Interval(int a, int b) const {
  const int d = (*this)(a, b);
  PointSet out;
  if (d == kUnreachable) return out;
  for (int k = 0; k <= d; ++k) out |= Sphere(a, k) & Sphere(b, d - k);
  return out;
}

bool IsSubspace(const Geometry& g, const PointSet& a) {
  for (int l = 0; l < g.line_count(); ++l) {
    const PointSet& s = g.line_set(l);
    const int meet = (s & a).Size();
    if (meet >= 2 && !s.IsSubsetOf(a)) return false;
  }
  return true;
}

bool IsGeometricHyperplane(const Geometry& g, const PointSet& a) {
  if (a.Empty() || a == g.AllPoints()) return false;
  if (!a.IsSubsetOf(g.AllPoints())) return false;
  if (!IsSubspace(g, a)) return false;
  for (int l = 0; l < g.line_count(); ++l) {
    if (!g.line_set(l).Intersects(a)) return false;
  }
  return true;
}

PointSet ConvexClosure(const Geometry& g, const DistanceMatrix& dm,
                       const PointSet& a) {
  if (a.Empty()) throw std::invalid_argument("convex closure of empty set");
  PointSet closure = a;
  while (true) {
    PointSet next = closure;
    const std::vector<int> members = closure.ToVector();
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        next |= dm.Interval(members[i], members[j]);
      }
    }
    for (int l = 0; l < g.line_count(); ++l) {
      if ((g.line_set(l) & closure).Size() >= 2) next |= g.line_set(l);
    }
    if (next == closure) return closure;
    closure = next;
  }
}

PointSet ConvexClosure(const Geometry& g, const PointSet& a) {
  return ConvexClosure(g, DistanceMatrix(g), a);
}

Geometry InducedGeometry(const Geometry& g, const PointSet& a) {
  std::vector<int> new_index(g.point_count(), -1);
  std::vector<LabeledPoint> labels;
  int n = 0;
  a.ForEach([&](int p) {
    if (p >= g.point_count()) {
      throw std::invalid_argument("induced geometry: point out of range");
    }
    new_index[p] = n++;
    if (g.has_labels()) labels.push_back(g.label(p));
  });
  std::vector<Line> lines;
  for (int l = 0; l < g.line_count(); ++l) {
    if (!g.line_set(l).IsSubsetOf(a)) continue;
    Line mapped;
    for (int p : g.line(l)) mapped.push_back(new_index[p]);
    lines.push_back(std::move(mapped));
  }
  return Geometry(n, std::move(lines), std::move(labels), g.name());
}

Geometry DualGeometry(const Geometry& g) {
  std::vector<Line> lines;
  lines.reserve(g.point_count());
  for (int p = 0; p < g.point_count(); ++p) {
    if (g.lines_through(p).size() < 2) {
      throw std::invalid_argument("dual geometry: point " + g.PointName(p) +
                                  " lies on fewer than two lines");
    }
    lines.push_back(g.lines_through(p));
  }
  std::string name = g.name().empty() ? "" : "dual(" + g.name() + ")";
  return Geometry(g.line_count(), std::move(lines), {}, std::move(name));
}

}  // namespace nearhex
