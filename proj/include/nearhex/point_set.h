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

#ifndef NEARHEX_POINT_SET_H_
#define NEARHEX_POINT_SET_H_

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nearhex {

// Upper bound on the number of points of any geometry handled here. The
// largest geometry built is the dual of DSp(6,2) with 315 points.
inline constexpr int kMaxPoints = 512;

// Fixed-width bitset over point indices [0, kMaxPoints).
class PointSet {
 public:
  static constexpr int kWords = kMaxPoints / 64;

  PointSet() = default;
  PointSet(std::initializer_list<int> points) {
    for (int p : points) Insert(p);
  }

  static PointSet FromVector(const std::vector<int>& points) {
    PointSet s;
    for (int p : points) s.Insert(p);
    return s;
  }
  // The set {0, ..., n-1}.
  static PointSet Range(int n) {
    PointSet s;
    for (int i = 0; i < n; ++i) s.Insert(i);
    return s;
  }

  void Insert(int p) { words_[p >> 6] |= uint64_t{1} << (p & 63); }
  void Erase(int p) { words_[p >> 6] &= ~(uint64_t{1} << (p & 63)); }
  bool Contains(int p) const { return (words_[p >> 6] >> (p & 63)) & 1u; }

  int Size() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool Empty() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  // Smallest element, or -1 when empty.
  int First() const {
    for (int i = 0; i < kWords; ++i) {
      if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
    }
    return -1;
  }

  bool IsSubsetOf(const PointSet& other) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  bool Intersects(const PointSet& other) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  PointSet& operator&=(const PointSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  PointSet& operator|=(const PointSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference.
  PointSet& operator-=(const PointSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet&, const PointSet&) = default;
  // Lexicographic on the underlying words; only meant for ordered containers.
  friend auto operator<=>(const PointSet&, const PointSet&) = default;

  // Calls fn(p) for every element in ascending order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      uint64_t w = words_[i];
      while (w != 0) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    ForEach([&](int p) { out.push_back(p); });
    return out;
  }

 private:
  std::array<uint64_t, kWords> words_{};
};

}  // namespace nearhex

#endif  // NEARHEX_POINT_SET_H_
