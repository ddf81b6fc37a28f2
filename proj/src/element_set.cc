// Copyright 2026 The Authors.
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

#include "depspace/element_set.h"

#include <algorithm>
#include <bit>
#include <cassert>

namespace depspace {

ElementSet::ElementSet(std::initializer_list<std::size_t> indices) {
  for (std::size_t i : indices) Insert(i);
}

ElementSet ElementSet::FromIndices(std::span<const std::size_t> indices) {
  ElementSet out;
  for (std::size_t i : indices) out.Insert(i);
  return out;
}

ElementSet ElementSet::FromMask(std::uint64_t mask) {
  ElementSet out;
  if (mask != 0) out.words_.push_back(mask);
  return out;
}

ElementSet ElementSet::FromWords(std::span<const std::uint64_t> words) {
  ElementSet out;
  out.words_.assign(words.begin(), words.end());
  out.Trim();
  return out;
}

ElementSet ElementSet::Prefix(std::size_t count) {
  ElementSet out;
  out.words_.assign((count + kWordBits - 1) / kWordBits, ~std::uint64_t{0});
  if (const std::size_t rem = count % kWordBits; rem != 0) {
    out.words_.back() = (std::uint64_t{1} << rem) - 1;
  }
  return out;
}

bool ElementSet::Contains(std::size_t index) const {
  const std::size_t w = index / kWordBits;
  return w < words_.size() && ((words_[w] >> (index % kWordBits)) & 1) != 0;
}

void ElementSet::Insert(std::size_t index) {
  const std::size_t w = index / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (index % kWordBits);
}

void ElementSet::Erase(std::size_t index) {
  const std::size_t w = index / kWordBits;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (index % kWordBits));
  Trim();
}

std::size_t ElementSet::Size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t ElementSet::Bound() const {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * kWordBits + kWordBits -
         std::countl_zero(words_.back());
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet out = words_.size() >= other.words_.size() ? *this : other;
  const ElementSet& small = words_.size() >= other.words_.size() ? other : *this;
  for (std::size_t w = 0; w < small.words_.size(); ++w) {
    out.words_[w] |= small.words_[w];
  }
  return out;
}

ElementSet ElementSet::Intersection(const ElementSet& other) const {
  ElementSet out;
  out.words_.resize(std::min(words_.size(), other.words_.size()));
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    out.words_[w] = words_[w] & other.words_[w];
  }
  out.Trim();
  return out;
}

ElementSet ElementSet::Difference(const ElementSet& other) const {
  ElementSet out = *this;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) out.words_[w] &= ~other.words_[w];
  out.Trim();
  return out;
}

ElementSet ElementSet::With(std::size_t index) const {
  ElementSet out = *this;
  out.Insert(index);
  return out;
}

ElementSet ElementSet::Without(std::size_t index) const {
  ElementSet out = *this;
  out.Erase(index);
  return out;
}

std::vector<std::size_t> ElementSet::ToIndices() const {
  std::vector<std::size_t> out;
  out.reserve(Size());
  ForEach([&](ElementId id) { out.push_back(id.index); });
  return out;
}

std::uint64_t ElementSet::ToMask() const {
  assert(words_.size() <= 1);
  return words_.empty() ? 0 : words_[0];
}

void ElementSet::CopyWords(std::span<std::uint64_t> out) const {
  assert(out.size() >= words_.size());
  std::fill(out.begin(), out.end(), 0);
  std::copy(words_.begin(), words_.end(), out.begin());
}

void ElementSet::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool LexLess(const ElementSet& lhs, const ElementSet& rhs) {
  const auto a = lhs.ToIndices();
  const auto b = rhs.ToIndices();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool GradedLess(const ElementSet& lhs, const ElementSet& rhs) {
  const std::size_t a = lhs.Size();
  const std::size_t b = rhs.Size();
  if (a != b) return a < b;
  return LexLess(lhs, rhs);
}

}  // namespace depspace
