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

#include "pmp/vertex_subset.h"

#include <string>

#include "pmp/error.h"

namespace pmp {

VertexSubset VertexSubset::Full(int universe) {
  VertexSubset s(universe);
  for (auto& w : s.words_) w = ~uint64_t{0};
  s.ClearTail();
  return s;
}

VertexSubset VertexSubset::FromMembers(int universe,
                                       std::span<const int> members) {
  VertexSubset s(universe);
  for (int v : members) {
    if (v < 0 || v >= universe) {
      Fail(ErrorCode::kInvalidArgument,
           "vertex " + std::to_string(v) + " outside 0.." +
               std::to_string(universe - 1));
    }
    s.insert(v);
  }
  return s;
}

VertexSubset VertexSubset::FromMask(int universe, uint64_t mask) {
  if (universe > 64) {
    Fail(ErrorCode::kInvalidArgument, "mask subsets need universe <= 64");
  }
  VertexSubset s(universe);
  if (universe > 0) s.words_[0] = mask;
  s.ClearTail();
  return s;
}

std::vector<int> VertexSubset::members() const {
  std::vector<int> out;
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

int VertexSubset::first() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
  }
  return -1;
}

uint64_t VertexSubset::ToMask() const {
  if (universe_ > 64) {
    Fail(ErrorCode::kInvalidArgument, "mask subsets need universe <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

VertexSubset VertexSubset::Complement() const {
  VertexSubset s = *this;
  for (auto& w : s.words_) w = ~w;
  s.ClearTail();
  return s;
}

bool VertexSubset::IsSubsetOf(const VertexSubset& other) const {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSubset::Intersects(const VertexSubset& other) const {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSubset& VertexSubset::operator|=(const VertexSubset& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSubset& VertexSubset::operator&=(const VertexSubset& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSubset& VertexSubset::operator-=(const VertexSubset& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

void VertexSubset::CheckSameUniverse(const VertexSubset& other) const {
  if (universe_ != other.universe_) {
    Fail(ErrorCode::kInvalidArgument,
         "vertex subsets over different universes (" +
             std::to_string(universe_) + " vs " +
             std::to_string(other.universe_) + ")");
  }
}

void VertexSubset::ClearTail() {
  int tail = universe_ & 63;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (uint64_t{1} << tail) - 1;
  }
}

}  // namespace pmp
