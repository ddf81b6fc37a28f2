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

#ifndef DEPSPACE_BASES_H_
#define DEPSPACE_BASES_H_

#include <cstddef>
#include <vector>

#include "depspace/element_set.h"
#include "depspace/space.h"

namespace depspace {

// Independent sets listed by cardinality, then lexicographically.
struct IndependentFamily {
  std::vector<ElementSet> sets;

  friend bool operator==(const IndependentFamily&,
                         const IndependentFamily&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 20;

// Grows the independent set `start` inside `universe` by one pass over
// universe - start in ground-set order, keeping each element whose addition
// leaves the set independent. A rejected element can never become
// acceptable later because supersets of dependent sets stay dependent, so
// the result is maximal within `universe`.
//
// Throws kNotContained (start not inside universe), kDependentStart and
// kForeignElement.
ElementSet ExtendToMaximalIndependent(const DependenceSpace& space,
                                      const ElementSet& start,
                                      const ElementSet& universe);

// Independent, and every element depends on it in one step.
bool IsBasis(const DependenceSpace& space, const ElementSet& set);

// Independent, and no single element outside it can be added.
bool IsMaximalIndependent(const DependenceSpace& space, const ElementSet& set);

// The greedy maximal independent set of the whole ground set. A maximal
// independent set is always a basis, so this never fails.
ElementSet FindBasis(const DependenceSpace& space);

// Both throw kTooLarge above `max_elements` elements (at most 20 is ever
// honoured).
IndependentFamily EnumerateIndependent(
    const DependenceSpace& space,
    std::size_t max_elements = kDefaultEnumerationCap);
IndependentFamily EnumerateBases(
    const DependenceSpace& space,
    std::size_t max_elements = kDefaultEnumerationCap);

}  // namespace depspace

#endif  // DEPSPACE_BASES_H_
