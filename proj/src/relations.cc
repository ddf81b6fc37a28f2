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

#include "depspace/relations.h"

#include <algorithm>

#include "depspace/kernels/kernels.h"

namespace depspace {

bool IsDirectlyDependent(const DependenceSpace& space, const ElementSet& set) {
  space.RequireMember(set);
  return std::binary_search(space.delta().begin(), space.delta().end(), set,
                            LexLess);
}

std::optional<DependenceWitness> IsDependent(const DependenceSpace& space,
                                             const ElementSet& set) {
  space.RequireMember(set);
  const auto target = space.Pack(set);
  const std::size_t count = space.delta().size();
  const std::size_t hit = kernels::Active().first_subset(
      space.packed_delta().data(), count, space.words(), target.data());
  if (hit == count) return std::nullopt;
  return DependenceWitness{DependenceWitness::Kind::kCircuit,
                           space.delta()[hit]};
}

std::optional<DependenceWitness> DependsOn(const DependenceSpace& space,
                                           ElementId x, const ElementSet& set) {
  space.RequireMember(x);
  space.RequireMember(set);
  if (set.Contains(x)) {
    return DependenceWitness{DependenceWitness::Kind::kMembership,
                             std::nullopt};
  }
  const auto target = space.Pack(set);
  const std::size_t count = space.delta().size();
  const std::size_t hit = kernels::Active().first_circuit_through(
      space.packed_delta().data(), count, space.words(), target.data(),
      x.index);
  if (hit == count) return std::nullopt;
  return DependenceWitness{DependenceWitness::Kind::kCircuit,
                           space.delta()[hit]};
}

ElementSet Closure(const DependenceSpace& space, const ElementSet& set) {
  space.RequireMember(set);
  const auto target = space.Pack(set);
  std::vector<std::uint64_t> reached(space.words(), 0);
  kernels::Active().one_missing_union(space.packed_delta().data(),
                                      space.delta().size(), space.words(),
                                      target.data(), reached.data());
  return set.Union(ElementSet::FromWords(reached));
}

ElementSet IteratedClosure(const DependenceSpace& space,
                           const ElementSet& set) {
  ElementSet current = Closure(space, set);
  while (true) {
    ElementSet next = Closure(space, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool ValidateDependsOnWitness(const DependenceSpace& space, ElementId x,
                              const ElementSet& set,
                              const DependenceWitness& witness) {
  if (witness.kind == DependenceWitness::Kind::kMembership) {
    return !witness.circuit && set.Contains(x);
  }
  if (!witness.circuit) return false;
  const ElementSet& circuit = *witness.circuit;
  return IsDirectlyDependent(space, circuit) && circuit.Size() >= 2 &&
         circuit.Contains(x) && circuit.Without(x.index).IsSubsetOf(set);
}

bool ValidateDependentWitness(const DependenceSpace& space,
                              const ElementSet& set,
                              const DependenceWitness& witness) {
  return witness.kind == DependenceWitness::Kind::kCircuit &&
         witness.circuit && IsDirectlyDependent(space, *witness.circuit) &&
         witness.circuit->IsSubsetOf(set);
}

}  // namespace depspace
