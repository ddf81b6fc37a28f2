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

#ifndef DEPSPACE_SPACE_H_
#define DEPSPACE_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "depspace/element_set.h"

namespace depspace {

// A finite ground set together with its family of directly dependent sets
// (delta). Immutable once built: every query in the library is a pure
// function of a const DependenceSpace, so one instance may be shared freely
// between threads.
//
// Delta is kept canonical: duplicates removed, members ordered
// lexicographically by their ascending index sequences.
class DependenceSpace {
 public:
  std::size_t size() const { return names_.size(); }
  int min_circuit_size() const { return min_circuit_size_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& Name(ElementId id) const { return names_.at(id.index); }
  std::optional<ElementId> Find(std::string_view name) const;
  // Throws kUnknownElement.
  ElementId Id(std::string_view name) const;

  const std::vector<ElementSet>& delta() const { return delta_; }

  // The whole ground set.
  const ElementSet& ground() const { return ground_; }

  // Words per packed bitset (at least one).
  std::size_t words() const { return words_; }
  // Delta members as `delta().size()` bitsets of `words()` words each.
  std::span<const std::uint64_t> packed_delta() const { return packed_; }

  // Throws kForeignElement if `set` has a member outside the ground set.
  void RequireMember(const ElementSet& set) const;
  void RequireMember(ElementId id) const;

  // Zero-padded `words()`-wide copy of `set`.
  std::vector<std::uint64_t> Pack(const ElementSet& set) const;

  // Set of the named elements; throws kUnknownElement.
  ElementSet SetOf(std::span<const std::string> names) const;
  ElementSet SetOf(std::initializer_list<std::string_view> names) const;

  friend bool operator==(const DependenceSpace& a, const DependenceSpace& b) {
    return a.names_ == b.names_ && a.delta_ == b.delta_ &&
           a.min_circuit_size_ == b.min_circuit_size_;
  }

 private:
  friend DependenceSpace BuildSpace(
      const std::vector<std::string>&,
      const std::vector<std::vector<std::string>>&, int);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ElementSet> delta_;
  ElementSet ground_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> packed_;
  int min_circuit_size_ = 2;
};

// True for a nonempty token without whitespace or '#'.
bool IsValidToken(std::string_view token);

// Validates and canonicalizes. Errors: kInvalidName, kDuplicateElementName,
// kUnknownElementInDelta, kDuplicateElementWithinMember, kMemberTooSmall
// (the last three carry the offending member's declaration index), and
// kInvalidArgument for a minimum circuit size other than 1 or 2.
DependenceSpace BuildSpace(
    const std::vector<std::string>& element_names,
    const std::vector<std::vector<std::string>>& delta_members,
    int min_circuit_size = 2);

DependenceSpace CanonicalForm(const DependenceSpace& space);

// Delta rendered back to names, in canonical order.
std::vector<std::vector<std::string>> DeltaNames(const DependenceSpace& space);

std::vector<std::string> NamesOf(const DependenceSpace& space,
                                 const ElementSet& set);

}  // namespace depspace

#endif  // DEPSPACE_SPACE_H_
