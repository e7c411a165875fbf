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

#ifndef NEARHEX_GEOMETRY_H_
#define NEARHEX_GEOMETRY_H_

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nearhex/labels.h"
#include "nearhex/point_set.h"

namespace nearhex {

// Raised when a construction or search contradicts a structural fact it
// relies on (e.g. a supposedly unique object is not unique). Misuse of an
// operation is reported with std::invalid_argument instead.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Line = std::vector<int>;

struct CanonicalLines {
  std::vector<Line> lines;
  int duplicates_removed = 0;
};
// Sorts every line, sorts the list lexicographically and drops repeats.
CanonicalLines CanonicalizeLines(std::vector<Line> lines);

// A finite point-line geometry on points 0..point_count-1. Lines are stored
// canonically (each ascending, list lexicographic, no repeats), so two
// geometries compare equal iff they are structurally identical. Immutable.
class Geometry {
 public:
  Geometry() = default;
  // Throws std::invalid_argument on an out-of-range index, a line with fewer
  // than two points, a repeated point inside a line, duplicate lines, more
  // than kMaxPoints points, or a label table of the wrong length.
  Geometry(int point_count, std::vector<Line> lines,
           std::vector<LabeledPoint> labels = {}, std::string name = {});

  int point_count() const { return point_count_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& line(int index) const { return lines_.at(index); }
  const PointSet& line_set(int index) const { return line_sets_.at(index); }
  // Indices of the lines containing p, ascending.
  const std::vector<int>& lines_through(int p) const {
    return lines_through_.at(p);
  }
  // Points collinear with p, excluding p itself.
  const PointSet& neighbours(int p) const { return neighbours_.at(p); }
  bool Collinear(int a, int b) const {
    return a != b && neighbours_.at(a).Contains(b);
  }
  // Index of the first line through both a and b, or -1.
  int LineThrough(int a, int b) const;
  PointSet AllPoints() const { return PointSet::Range(point_count_); }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<LabeledPoint>& labels() const { return labels_; }
  const LabeledPoint& label(int p) const { return labels_.at(p); }
  // Label text of p, or its decimal index for unlabeled geometries.
  std::string PointName(int p) const;
  std::optional<int> FindPoint(const LabeledPoint& label) const;

  const std::string& name() const { return name_; }
  Geometry Renamed(std::string name) const;

  friend bool operator==(const Geometry& a, const Geometry& b) {
    return a.point_count_ == b.point_count_ && a.lines_ == b.lines_ &&
           a.labels_ == b.labels_;
  }

 private:
  int point_count_ = 0;
  std::vector<Line> lines_;
  std::vector<LabeledPoint> labels_;
  std::string name_;
  std::vector<PointSet> line_sets_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<PointSet> neighbours_;
};

struct PlsVerdict {
  bool ok = true;
  // Point pairs lying on two or more lines.
  std::vector<std::pair<int, int>> shared_pairs;
  // Lines with fewer than two points.
  std::vector<int> short_lines;
};
PlsVerdict ValidatePls(const Geometry& g);

// A^perp: points equal or collinear to every member of A. For a single
// point this is x^perp and contains x. For two points at distance 2 it
// holds only their common neighbours. Throws std::invalid_argument when A
// is empty or names a point outside the geometry.
PointSet Perp(const Geometry& g, const PointSet& a);

// x*y, the third point on the line xy. Throws std::invalid_argument unless
// x and y are distinct, collinear, and their line has exactly three points.
int ThirdPoint(const Geometry& g, int x, int y);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct DistanceTable {
  int source = 0;
  std::vector<int> dist;  // kUnreachable for other components
};
DistanceTable Distances(const Geometry& g, int source);

struct Metrics {
  bool connected = true;
  int diameter = 0;  // largest finite distance
};
Metrics ComputeMetrics(const Geometry& g);

// All-pairs distances of the collinearity graph with per-source spheres,
// so that geodesic intervals are a handful of bitset operations.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Geometry& g);

  int point_count() const { return n_; }
  int operator()(int a, int b) const { return dist_[a * n_ + b]; }
  // Points at distance exactly k from source (empty past the eccentricity).
  const PointSet& Sphere(int source, int k) const;
  // Points on some shortest path from a to b, endpoints included.
  PointSet Interval(int a, int b) const;
  bool connected() const { return metrics_.connected; }
  int diameter() const { return metrics_.diameter; }

 private:
  int n_;
  std::vector<int> dist_;
  std::vector<std::vector<PointSet>> spheres_;
  Metrics metrics_;
  PointSet empty_;
};

bool IsSubspace(const Geometry& g, const PointSet& a);
bool IsGeometricHyperplane(const Geometry& g, const PointSet& a);

// Smallest superset of A containing every geodesic between its members and
// every line meeting it in two points, i.e. the convex subspace spanned by
// A. Throws std::invalid_argument for empty A.
PointSet ConvexClosure(const Geometry& g, const PointSet& a);
PointSet ConvexClosure(const Geometry& g, const DistanceMatrix& dm,
                       const PointSet& a);

// Geometry on A (renumbered in ascending order) whose lines are the lines of
// g lying entirely inside A. Labels are carried over.
Geometry InducedGeometry(const Geometry& g, const PointSet& a);

// Points and lines swapped: dual point i is line i of g, and each point of g
// becomes the set of lines through it. Throws std::invalid_argument when a
// point lies on fewer than two lines.
Geometry DualGeometry(const Geometry& g);

}  // namespace nearhex

#endif  // NEARHEX_GEOMETRY_H_
