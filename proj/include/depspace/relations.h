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

#ifndef DEPSPACE_RELATIONS_H_
#define DEPSPACE_RELATIONS_H_

#include <optional>

#include "depspace/element_set.h"
#include "depspace/space.h"

namespace depspace {

// Evidence for a dependence claim. A Membership witness says x is in A
// itself; a Circuit witness names the delta member that does the work.
struct DependenceWitness {
  enum class Kind { kMembership, kCircuit };

  Kind kind = Kind::kMembership;
  std::optional<ElementSet> circuit;

  friend bool operator==(const DependenceWitness&,
                         const DependenceWitness&) = default;
};

// `set` is itself a delta member. Throws kForeignElement.
bool IsDirectlyDependent(const DependenceSpace& space, const ElementSet& set);

// The first delta member (canonical order) contained in `set`, if any; the
// set is independent exactly when this is empty. Throws kForeignElement.
std::optional<DependenceWitness> IsDependent(const DependenceSpace& space,
                                             const ElementSet& set);

// One-step dependence of x on A: Membership when x is in A, otherwise the
// first delta member D with at least two elements, x in D and D - {x}
// inside A. There is no chaining through intermediate elements; see
// IteratedClosure for that. Throws kForeignElement.
std::optional<DependenceWitness> DependsOn(const DependenceSpace& space,
                                           ElementId x, const ElementSet& set);

// {x : DependsOn(x, set)}. Extensive and monotone, but idempotent only on
// spaces where transitivity holds.
ElementSet Closure(const DependenceSpace& space, const ElementSet& set);

// Least fixpoint of Closure above `set`.
ElementSet IteratedClosure(const DependenceSpace& space, const ElementSet& set);

// Checks a witness against its claim by direct recomputation.
bool ValidateDependsOnWitness(const DependenceSpace& space, ElementId x,
                              const ElementSet& set,
                              const DependenceWitness& witness);
bool ValidateDependentWitness(const DependenceSpace& space,
                              const ElementSet& set,
                              const DependenceWitness& witness);

}  // namespace depspace

#endif  // DEPSPACE_RELATIONS_H_
