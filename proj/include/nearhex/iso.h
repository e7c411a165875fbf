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

#ifndef NEARHEX_ISO_H_
#define NEARHEX_ISO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nearhex/geometry.h"

namespace nearhex {

// Canonical labeling of the point-line incidence graph. Points and lines are
// kept in separate colour classes, so only incidence-preserving relabelings
// of points (with the induced relabeling of lines) are considered.
struct CanonicalForm {
  int point_count = 0;
  int line_count = 0;
  // Lines in canonical order, each written as its size followed by its
  // canonical point indices in ascending order.
  std::vector<int> certificate;
  // point_labeling[p] is the canonical index of point p.
  std::vector<int> point_labeling;
  // Search statistics (not part of the certificate).
  long nodes = 0;
  long leaves = 0;
  int generators = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.point_count == b.point_count && a.line_count == b.line_count &&
           a.certificate == b.certificate;
  }
};

// Deterministic: relabelled copies of g give the same certificate, and the
// certificate determines g up to isomorphism.
CanonicalForm ComputeCanonicalForm(const Geometry& g);

struct IsoVerdict {
  bool isomorphic = false;
  // mapping[p] is the image in the second geometry of point p of the first.
  std::vector<int> mapping;
  // Distinguishing invariant when not isomorphic.
  std::string reason;
};
// Cheap invariants (counts, degree and line-size multisets, distance
// distribution) first, then canonical forms. A returned mapping has been
// checked line by line.
IsoVerdict AreIsomorphic(const Geometry& a, const Geometry& b);

// True iff mapping is a bijection of points carrying the lines of a exactly
// onto the lines of b.
bool IsIsomorphism(const Geometry& a, const Geometry& b,
                   const std::vector<int>& mapping);

// Copy of g with point p renamed perm[p]; labels move with their points.
Geometry Relabel(const Geometry& g, const std::vector<int>& perm);

}  // namespace nearhex

#endif  // NEARHEX_ISO_H_
