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

#include "nearhex/labels.h"

#include <algorithm>
#include <stdexcept>

namespace nearhex {
namespace {

std::string RenderEdge(Edge e) {
  return std::string{static_cast<char>('0' + e.lo),
                     static_cast<char>('0' + e.hi)};
}

// Parses two digits "ab" with 1 <= a < b <= max_element.
std::optional<Edge> ParseEdge(std::string_view s, int max_element) {
  if (s.size() != 2) return std::nullopt;
  int a = s[0] - '0';
  int b = s[1] - '0';
  if (a < 1 || b > max_element || a >= b) return std::nullopt;
  return Edge{a, b};
}

struct Overload {
  std::string operator()(const EdgeLabel& l) const {
    return RenderEdge(l.edge);
  }
  std::string operator()(const PrimedEdgeLabel& l) const {
    return RenderEdge(l.edge) + "'";
  }
  std::string operator()(const PairLabel& l) const {
    return "(" + RenderEdge(l.x) + "," + RenderEdge(l.u) + "')";
  }
  std::string operator()(const PartitionLabel& l) const {
    std::string out = "{";
    for (size_t i = 0; i < l.blocks.size(); ++i) {
      if (i > 0) out += ",";
      out += RenderEdge(l.blocks[i]);
    }
    return out + "}";
  }
  std::string operator()(const OrderedPairLabel& l) const {
    return "(" + RenderEdge(l.first) + "," + RenderEdge(l.second) + ")";
  }
};

}  // namespace

Edge MakeEdge(int a, int b) {
  if (a == b) throw std::invalid_argument("edge needs two distinct elements");
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool Disjoint(Edge a, Edge b) {
  return a.lo != b.lo && a.lo != b.hi && a.hi != b.lo && a.hi != b.hi;
}

bool InW2Perp(Edge x, Edge u) { return x == u || Disjoint(x, u); }

int EdgeIndex(Edge e) {
  if (e.lo < 1 || e.hi > 6 || e.lo >= e.hi) {
    throw std::invalid_argument("not an edge of {1..6}");
  }
  // Edges starting with 1 occupy 5 slots, with 2 occupy 4, and so on.
  int index = 0;
  for (int a = 1; a < e.lo; ++a) index += 6 - a;
  return index + (e.hi - e.lo - 1);
}

Edge EdgeAt(int index) {
  if (index < 0 || index >= kW2Size) {
    throw std::out_of_range("edge index out of range");
  }
  for (int a = 1; a <= 5; ++a) {
    if (index < 6 - a) return Edge{a, a + 1 + index};
    index -= 6 - a;
  }
  throw std::logic_error("unreachable");
}

std::string RenderLabel(const LabeledPoint& label) {
  return std::visit(Overload{}, label);
}

std::optional<LabeledPoint> ParseLabel(std::string_view text) {
  if (text.size() == 2) {
    if (auto e = ParseEdge(text, 6)) return EdgeLabel{*e};
    return std::nullopt;
  }
  if (text.size() == 3 && text[2] == '\'') {
    if (auto e = ParseEdge(text.substr(0, 2), 6)) return PrimedEdgeLabel{*e};
    return std::nullopt;
  }
  if (text.size() >= 7 && text.front() == '(' && text.back() == ')' &&
      text[3] == ',') {
    auto first = ParseEdge(text.substr(1, 2), 6);
    if (!first) return std::nullopt;
    if (text.size() == 7) {
      auto second = ParseEdge(text.substr(4, 2), 6);
      if (!second) return std::nullopt;
      return OrderedPairLabel{*first, *second};
    }
    if (text.size() == 8 && text[6] == '\'') {
      auto second = ParseEdge(text.substr(4, 2), 6);
      if (!second) return std::nullopt;
      return PairLabel{*first, *second};
    }
    return std::nullopt;
  }
  if (text.size() == 13 && text.front() == '{' && text.back() == '}') {
    PartitionLabel p;
    int covered = 0;
    for (int i = 0; i < 4; ++i) {
      if (i > 0 && text[3 * i] != ',') return std::nullopt;
      auto e = ParseEdge(text.substr(1 + 3 * i, 2), 8);
      if (!e) return std::nullopt;
      p.blocks[i] = *e;
      covered |= (1 << e->lo) | (1 << e->hi);
    }
    if (covered != 0x1fe) return std::nullopt;
    std::sort(p.blocks.begin(), p.blocks.end());
    return p;
  }
  return std::nullopt;
}

}  // namespace nearhex
