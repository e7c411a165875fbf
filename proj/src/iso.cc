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

#include "nearhex/iso.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace nearhex {
namespace {

// Incidence graph: vertices 0..n-1 are points, n..n+m-1 are lines.
struct IncidenceGraph {
  int points = 0;
  int size = 0;
  std::vector<std::vector<int>> adj;

  explicit IncidenceGraph(const Geometry& g)
      : points(g.point_count()),
        size(g.point_count() + g.line_count()),
        adj(size) {
    for (int l = 0; l < g.line_count(); ++l) {
      for (int p : g.line(l)) {
        adj[p].push_back(points + l);
        adj[points + l].push_back(p);
      }
    }
  }
};

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

void Mix(uint64_t& h, uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

int CountColours(const std::vector<int>& colours) {
  return colours.empty()
             ? 0
             : *std::max_element(colours.begin(), colours.end()) + 1;
}

// Colour refinement to an equitable partition. Colours are ranks 0..k-1 and
// refinement keeps the relative order of existing cells, so the result is a
// function of the input partition that commutes with isomorphisms. Returns
// a hash of the refinement trace and the quotient of the final partition.
class Refiner {
 public:
  explicit Refiner(const IncidenceGraph& graph)
      : graph_(graph), order_(graph.size), keys_(graph.size) {}

  uint64_t Refine(std::vector<int>& colours) {
    uint64_t trace = kFnvOffset;
    int k = CountColours(colours);
    while (true) {
      for (int v = 0; v < graph_.size; ++v) {
        std::vector<int>& key = keys_[v];
        key.clear();
        key.push_back(colours[v]);
        for (int u : graph_.adj[v]) key.push_back(colours[u]);
        std::sort(key.begin() + 1, key.end());
      }
      std::iota(order_.begin(), order_.end(), 0);
      std::sort(order_.begin(), order_.end(),
                [&](int a, int b) { return keys_[a] < keys_[b]; });
      std::vector<int> next(graph_.size);
      int rank = 0;
      for (int i = 0; i < graph_.size; ++i) {
        if (i > 0 && keys_[order_[i]] != keys_[order_[i - 1]]) ++rank;
        next[order_[i]] = rank;
      }
      const int next_k = graph_.size == 0 ? 0 : rank + 1;
      Mix(trace, static_cast<uint64_t>(next_k));
      if (next_k == k) break;
      colours = std::move(next);
      k = next_k;
    }
    // The partition is stable; the key of any cell member describes the
    // cell's row of the quotient matrix.
    for (int i = 0; i < graph_.size; ++i) {
      if (i > 0 && keys_[order_[i]] == keys_[order_[i - 1]]) continue;
      for (int c : keys_[order_[i]]) Mix(trace, static_cast<uint64_t>(c));
    }
    return trace;
  }

 private:
  const IncidenceGraph& graph_;
  std::vector<int> order_;
  std::vector<std::vector<int>> keys_;
};

// v becomes a singleton cell placed just before the rest of its cell.
std::vector<int> Individualize(const std::vector<int>& colours, int v) {
  std::vector<int> out(colours.size());
  const int c = colours[v];
  for (size_t u = 0; u < colours.size(); ++u) {
    if (colours[u] > c) {
      out[u] = colours[u] + 1;
    } else if (colours[u] == c && static_cast<int>(u) != v) {
      out[u] = c + 1;
    } else {
      out[u] = colours[u];
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

struct Leaf {
  std::vector<int> certificate;
  std::vector<int> labeling;  // vertex -> canonical position
  std::vector<int> path;
  std::vector<uint64_t> traces;
};

// Depth-first individualization-refinement search for the best leaf under
// the order (trace sequence descending, certificate ascending). Subtrees are
// skipped when an automorphism fixing the current path maps them onto an
// explored sibling, or when their trace prefix is worse than the best one.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const IncidenceGraph& graph)
      : graph_(graph), refiner_(graph) {}

  CanonicalForm Run(int line_count) {
    std::vector<int> colours(graph_.size);
    for (int v = graph_.points; v < graph_.size; ++v) colours[v] = 1;
    if (graph_.points == 0 || graph_.points == graph_.size) {
      std::fill(colours.begin(), colours.end(), 0);
    }
    traces_.push_back(refiner_.Refine(colours));
    ++nodes_;
    Search(colours, 0);

    CanonicalForm form;
    form.point_count = graph_.points;
    form.line_count = line_count;
    form.certificate = best_.certificate;
    form.point_labeling.assign(best_.labeling.begin(),
                               best_.labeling.begin() + graph_.points);
    form.nodes = nodes_;
    form.leaves = leaves_;
    form.generators = static_cast<int>(generators_.size());
    return form;
  }

 private:
  // Returns the level at which the search resumes; a node at a deeper level
  // returns immediately.
  int Search(const std::vector<int>& colours, int level) {
    const int target = TargetCell(colours);
    if (target < 0) return AtLeaf(colours, level);

    std::vector<int> cell;
    for (int v = 0; v < graph_.size; ++v) {
      if (colours[v] == target) cell.push_back(v);
    }
    std::vector<int> explored;
    size_t gens_seen = 0;
    std::vector<int> orbit_of;
    for (int w : cell) {
      if (!explored.empty()) {
        if (gens_seen != generators_.size() || orbit_of.empty()) {
          orbit_of = CellOrbits(cell);
          gens_seen = generators_.size();
        }
        const int rep = orbit_of[w];
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int e) { return orbit_of[e] == rep; })) {
          continue;
        }
      }
      std::vector<int> child = Individualize(colours, w);
      const uint64_t trace = refiner_.Refine(child);
      ++nodes_;
      path_.push_back(w);
      traces_.push_back(trace);
      int resume = level;
      if (PrefixOrder() >= 0) resume = Search(child, level + 1);
      path_.pop_back();
      traces_.pop_back();
      explored.push_back(w);
      if (resume < level) return resume;
    }
    return level - 1;
  }

  // Orbit representative of each cell vertex under the generators that fix
  // the current path pointwise; indexed by vertex.
  std::vector<int> CellOrbits(const std::vector<int>& cell) {
    UnionFind uf(graph_.size);
    for (const std::vector<int>& gen : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(),
                               [&](int v) { return gen[v] == v; });
      if (!fixes) continue;
      for (int v : cell) uf.Union(v, gen[v]);
    }
    std::vector<int> out(graph_.size, -1);
    for (int v : cell) out[v] = uf.Find(v);
    return out;
  }

  static int TargetCell(const std::vector<int>& colours) {
    std::vector<int> size(colours.size() + 1, 0);
    for (int c : colours) ++size[c];
    for (size_t c = 0; c < size.size(); ++c) {
      if (size[c] > 1) return static_cast<int>(c);
    }
    return -1;
  }

  // Compares the current trace prefix with the best leaf's: -1 worse, 0
  // equal, 1 better (also 1 when no leaf exists yet).
  int PrefixOrder() const {
    if (!have_best_) return 1;
    const size_t n = std::min(traces_.size(), best_.traces.size());
    for (size_t i = 0; i < n; ++i) {
      if (traces_[i] != best_.traces[i]) {
        return traces_[i] > best_.traces[i] ? 1 : -1;
      }
    }
    return 0;
  }

  int AtLeaf(const std::vector<int>& colours, int level) {
    ++leaves_;
    Leaf leaf;
    leaf.labeling = colours;
    leaf.path = path_;
    leaf.traces = traces_;
    leaf.certificate = Certificate(colours);
    if (!have_best_) {
      first_ = leaf;
      best_ = std::move(leaf);
      have_best_ = true;
      return level - 1;
    }
    for (const Leaf* known : {&first_, &best_}) {
      if (leaf.certificate == known->certificate) {
        AddGenerator(*known, leaf);
        return CommonPrefix(known->path, leaf.path);
      }
    }
    const int order = PrefixOrder();
    if (order > 0 || (order == 0 && leaf.certificate < best_.certificate)) {
      best_ = std::move(leaf);
    }
    return level - 1;
  }

  std::vector<int> Certificate(const std::vector<int>& colours) const {
    std::vector<int> vertex_at(graph_.size);
    for (int v = 0; v < graph_.size; ++v) vertex_at[colours[v]] = v;
    std::vector<int> cert;
    for (int pos = graph_.points; pos < graph_.size; ++pos) {
      const std::vector<int>& incident = graph_.adj[vertex_at[pos]];
      std::vector<int> line;
      for (int p : incident) line.push_back(colours[p]);
      std::sort(line.begin(), line.end());
      cert.push_back(static_cast<int>(line.size()));
      cert.insert(cert.end(), line.begin(), line.end());
    }
    return cert;
  }

  // from and to have equal certificates; the map taking each vertex of from
  // to the vertex of to with the same canonical position is an automorphism.
  void AddGenerator(const Leaf& from, const Leaf& to) {
    std::vector<int> vertex_at(graph_.size);
    for (int v = 0; v < graph_.size; ++v) vertex_at[to.labeling[v]] = v;
    std::vector<int> gen(graph_.size);
    bool identity = true;
    for (int v = 0; v < graph_.size; ++v) {
      gen[v] = vertex_at[from.labeling[v]];
      identity = identity && gen[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gen));
  }

  static int CommonPrefix(const std::vector<int>& a,
                          const std::vector<int>& b) {
    size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  const IncidenceGraph& graph_;
  Refiner refiner_;
  std::vector<int> path_;
  std::vector<uint64_t> traces_;
  std::vector<std::vector<int>> generators_;
  Leaf first_;
  Leaf best_;
  bool have_best_ = false;
  long nodes_ = 0;
  long leaves_ = 0;
};

std::string DescribeMultiset(const std::map<int, int>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [value, count] : m) {
    os << (first ? "" : ",") << value << ":" << count;
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<int, int> DistanceDistribution(const Geometry& g) {
  std::map<int, int> hist;
  const DistanceMatrix dm(g);
  for (int a = 0; a < g.point_count(); ++a) {
    for (int b = a + 1; b < g.point_count(); ++b) ++hist[dm(a, b)];
  }
  return hist;
}

std::map<int, int> Degrees(const Geometry& g) {
  std::map<int, int> hist;
  for (int p = 0; p < g.point_count(); ++p) {
    ++hist[static_cast<int>(g.lines_through(p).size())];
  }
  return hist;
}

std::map<int, int> LineSizes(const Geometry& g) {
  std::map<int, int> hist;
  for (const Line& l : g.lines()) ++hist[static_cast<int>(l.size())];
  return hist;
}

}  // namespace

CanonicalForm ComputeCanonicalForm(const Geometry& g) {
  const IncidenceGraph graph(g);
  return CanonicalSearch(graph).Run(g.line_count());
}

bool IsIsomorphism(const Geometry& a, const Geometry& b,
                   const std::vector<int>& mapping) {
  if (a.point_count() != b.point_count() ||
      a.line_count() != b.line_count() ||
      static_cast<int>(mapping.size()) != a.point_count()) {
    return false;
  }
  std::vector<bool> hit(b.point_count(), false);
  for (int image : mapping) {
    if (image < 0 || image >= b.point_count() || hit[image]) return false;
    hit[image] = true;
  }
  std::vector<Line> mapped;
  for (const Line& l : a.lines()) {
    Line m;
    for (int p : l) m.push_back(mapping[p]);
    mapped.push_back(std::move(m));
  }
  return CanonicalizeLines(std::move(mapped)).lines == b.lines();
}

IsoVerdict AreIsomorphic(const Geometry& a, const Geometry& b) {
  IsoVerdict v;
  auto differ = [&](const std::string& what, const std::string& x,
                    const std::string& y) {
    v.reason = what + " differ: " + x + " vs " + y;
    return v;
  };
  if (a.point_count() != b.point_count()) {
    return differ("point counts", std::to_string(a.point_count()),
                  std::to_string(b.point_count()));
  }
  if (a.line_count() != b.line_count()) {
    return differ("line counts", std::to_string(a.line_count()),
                  std::to_string(b.line_count()));
  }
  if (LineSizes(a) != LineSizes(b)) {
    return differ("line sizes", DescribeMultiset(LineSizes(a)),
                  DescribeMultiset(LineSizes(b)));
  }
  if (Degrees(a) != Degrees(b)) {
    return differ("point degrees", DescribeMultiset(Degrees(a)),
                  DescribeMultiset(Degrees(b)));
  }
  const auto da = DistanceDistribution(a);
  const auto db = DistanceDistribution(b);
  if (da != db) {
    return differ("distance distributions", DescribeMultiset(da),
                  DescribeMultiset(db));
  }
  const CanonicalForm ca = ComputeCanonicalForm(a);
  const CanonicalForm cb = ComputeCanonicalForm(b);
  if (!(ca == cb)) {
    v.reason = "canonical certificates differ";
    return v;
  }
  std::vector<int> point_at(b.point_count());
  for (int q = 0; q < b.point_count(); ++q) point_at[cb.point_labeling[q]] = q;
  v.mapping.resize(a.point_count());
  for (int p = 0; p < a.point_count(); ++p) {
    v.mapping[p] = point_at[ca.point_labeling[p]];
  }
  if (!IsIsomorphism(a, b, v.mapping)) {
    throw ConsistencyError("canonical labelings agree but the induced map "
                           "is not an isomorphism");
  }
  v.isomorphic = true;
  return v;
}

Geometry Relabel(const Geometry& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.point_count()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<bool> hit(perm.size(), false);
  for (int image : perm) {
    if (image < 0 || image >= g.point_count() || hit[image]) {
      throw std::invalid_argument("relabel: not a permutation");
    }
    hit[image] = true;
  }
  std::vector<Line> lines;
  for (const Line& l : g.lines()) {
    Line m;
    for (int p : l) m.push_back(perm.at(p));
    lines.push_back(std::move(m));
  }
  std::vector<LabeledPoint> labels;
  if (g.has_labels()) {
    labels.resize(g.point_count());
    for (int p = 0; p < g.point_count(); ++p) labels[perm[p]] = g.label(p);
  }
  return Geometry(g.point_count(), std::move(lines), std::move(labels),
                  g.name());
}

}  // namespace nearhex
