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

#ifndef DEPSPACE_ELEMENT_SET_H_
#define DEPSPACE_ELEMENT_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace depspace {

// Position of an element in its space's declaration order.
struct ElementId {
  std::size_t index = 0;

  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

// A finite set of element indices stored as a bitset. Trailing zero words
// are never kept, so equal sets always compare equal word-for-word.
class ElementSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> indices);

  static ElementSet FromIndices(std::span<const std::size_t> indices);
  static ElementSet FromMask(std::uint64_t mask);
  static ElementSet FromWords(std::span<const std::uint64_t> words);
  // {0, ..., count - 1}.
  static ElementSet Prefix(std::size_t count);

  bool Contains(ElementId id) const { return Contains(id.index); }
  bool Contains(std::size_t index) const;
  void Insert(std::size_t index);
  void Insert(ElementId id) { Insert(id.index); }
  void Erase(std::size_t index);
  void Erase(ElementId id) { Erase(id.index); }

  std::size_t Size() const;
  bool Empty() const { return words_.empty(); }
  // One past the largest member, 0 for the empty set.
  std::size_t Bound() const;

  bool IsSubsetOf(const ElementSet& other) const;

  ElementSet Union(const ElementSet& other) const;
  ElementSet Intersection(const ElementSet& other) const;
  ElementSet Difference(const ElementSet& other) const;
  ElementSet With(std::size_t index) const;
  ElementSet Without(std::size_t index) const;

  std::vector<std::size_t> ToIndices() const;
  // Requires Bound() <= 64.
  std::uint64_t ToMask() const;

  // Copies the bitset into `out`, zero-padding; `out` must be wide enough.
  void CopyWords(std::span<std::uint64_t> out) const;
  std::span<const std::uint64_t> words() const { return words_; }

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(ElementId{w * kWordBits + static_cast<std::size_t>(bit)});
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

// Lexicographic order on the ascending index sequences; used for the delta
// family ({a,b,c} < {a,d}).
bool LexLess(const ElementSet& lhs, const ElementSet& rhs);

// Cardinality first, then lexicographic; used for enumerated families.
bool GradedLess(const ElementSet& lhs, const ElementSet& rhs);

}  // namespace depspace

#endif  // DEPSPACE_ELEMENT_SET_H_
