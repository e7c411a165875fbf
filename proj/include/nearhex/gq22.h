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

#ifndef NEARHEX_GQ22_H_
#define NEARHEX_GQ22_H_

#include <array>
#include <string>
#include <vector>

#include "nearhex/geometry.h"

namespace nearhex {

// The (2,2)-GQ W(2) in its edge/factor model: points are the 15 edges of
// {1..6} (index = EdgeIndex), lines are the 15 one-factors.
Geometry BuildW2();

struct GqVerdict {
  bool is_gq = false;
  int s = 0;
  int t = 0;
  std::string witness;  // first failed condition, empty when is_gq
};
// Checks: partial linear space, constant line size s+1, constant number t+1
// of lines per point, and for every non-incident point-line pair exactly one
// point of the line collinear with the point.
GqVerdict IsGq(const Geometry& g);

enum class TriadMode { kPoint, kLine };
enum class TriadKind { kComplete, kIncomplete, kOther };

// Three pairwise non-collinear points, or three pairwise disjoint lines when
// mode is kLine (then elements and perp are line indices of the original
// geometry). In W(2) the kind is never kOther.
struct Triad {
  std::array<int, 3> elements{};
  TriadKind kind = TriadKind::kOther;
  PointSet perp;
  TriadMode mode = TriadMode::kPoint;
};

// Classifies {a, b, c} as a point triad of g. Throws std::invalid_argument
// if two of them coincide or are collinear.
Triad MakeTriad(const Geometry& g, int a, int b, int c);

// All triads of g in lexicographic order of their elements. Line triads are
// point triads of DualGeometry(g).
std::vector<Triad> EnumerateTriads(const Geometry& g, TriadMode mode);

// The unique 9-point subset containing the incomplete point triad t whose
// induced geometry is a (2,1)-GQ. Throws std::invalid_argument for a
// complete triad or a line triad and ConsistencyError unless exactly one
// such subset exists.
PointSet IncompleteTriadSubGq(const Geometry& g, const Triad& t);

// The unique complete triad containing the non-collinear pair {x, y}.
// Throws std::invalid_argument for collinear or equal points and
// ConsistencyError unless exactly one exists.
Triad CompleteTriadThrough(const Geometry& g, int x, int y);

}  // namespace nearhex

#endif  // NEARHEX_GQ22_H_
