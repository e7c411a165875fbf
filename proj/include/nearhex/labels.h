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

#ifndef NEARHEX_LABELS_H_
#define NEARHEX_LABELS_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nearhex {

// A 2-subset {lo, hi} of a small ground set {1, ..., 8}; lo < hi.
struct Edge {
  int lo = 0;
  int hi = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Builds an edge from two distinct elements in either order.
Edge MakeEdge(int a, int b);
bool Disjoint(Edge a, Edge b);
// Membership u in x^perp in the edge model of W(2): equal or disjoint edges.
bool InW2Perp(Edge x, Edge u);

// Number of edges of {1..6}.
inline constexpr int kW2Size = 15;
// Lexicographic index 0..14 of an edge of {1..6} (12 -> 0, ..., 56 -> 14).
int EdgeIndex(Edge e);
Edge EdgeAt(int index);

// Provenance labels of points. The isomorphism x <-> x' between the two
// copies of W(2) is the identity on edges, so a primed edge stores the same
// Edge value as its unprimed partner.
struct EdgeLabel {
  Edge edge;
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};
struct PrimedEdgeLabel {
  Edge edge;
  friend auto operator<=>(const PrimedEdgeLabel&,
                          const PrimedEdgeLabel&) = default;
};
// (x, u') with u' in x'^perp.
struct PairLabel {
  Edge x;
  Edge u;
  friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
};
// Four disjoint 2-subsets of {1..8}, sorted ascending.
struct PartitionLabel {
  std::array<Edge, 4> blocks;
  friend auto operator<=>(const PartitionLabel&,
                          const PartitionLabel&) = default;
};
// (x, y) with x = y or x ~ y in W(2).
struct OrderedPairLabel {
  Edge first;
  Edge second;
  friend auto operator<=>(const OrderedPairLabel&,
                          const OrderedPairLabel&) = default;
};

using LabeledPoint = std::variant<EdgeLabel, PrimedEdgeLabel, PairLabel,
                                  PartitionLabel, OrderedPairLabel>;

// Renders "12", "34'", "(12,34')", "{12,34,56,78}", "(12,46)".
std::string RenderLabel(const LabeledPoint& label);
// Inverse of RenderLabel; nullopt for anything it does not produce.
std::optional<LabeledPoint> ParseLabel(std::string_view text);

}  // namespace nearhex

#endif  // NEARHEX_LABELS_H_
