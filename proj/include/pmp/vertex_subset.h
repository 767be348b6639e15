// Copyright 2026 The pmpspec Authors.
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

#ifndef PMP_VERTEX_SUBSET_H_
#define PMP_VERTEX_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pmp {

// A subset of the vertex set {0, ..., n-1}, stored as a bitset. The measure
// of a subset is its cardinality divided by n (uniform vertex measure).
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSubset Full(int universe);
  static VertexSubset FromMembers(int universe, std::span<const int> members);
  static VertexSubset FromMembers(int universe,
                                  std::initializer_list<int> members) {
    return FromMembers(universe, std::span<const int>(members.begin(),
                                                      members.size()));
  }
  // Bit i of `mask` selects vertex i. Requires universe <= 64.
  static VertexSubset FromMask(int universe, uint64_t mask);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  double measure() const {
    return universe_ == 0 ? 0.0 : static_cast<double>(count()) / universe_;
  }

  // Members in ascending order.
  std::vector<int> members() const;
  // Lowest member, or -1 when empty.
  int first() const;
  uint64_t ToMask() const;

  VertexSubset Complement() const;
  bool IsSubsetOf(const VertexSubset& other) const;
  bool Intersects(const VertexSubset& other) const;

  VertexSubset& operator|=(const VertexSubset& other);
  VertexSubset& operator&=(const VertexSubset& other);
  VertexSubset& operator-=(const VertexSubset& other);
  friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) {
    return a |= b;
  }
  friend VertexSubset operator&(VertexSubset a, const VertexSubset& b) {
    return a &= b;
  }
  friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) {
    return a -= b;
  }
  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  void CheckSameUniverse(const VertexSubset& other) const;
  void ClearTail();

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace pmp

#endif  // PMP_VERTEX_SUBSET_H_
