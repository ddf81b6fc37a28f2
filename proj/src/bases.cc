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

#include "depspace/bases.h"

#include <algorithm>

#include "depspace/error.h"
#include "depspace/relations.h"
#include "subset_tables.h"

namespace depspace {

ElementSet ExtendToMaximalIndependent(const DependenceSpace& space,
                                      const ElementSet& start,
                                      const ElementSet& universe) {
  space.RequireMember(start);
  space.RequireMember(universe);
  if (!start.IsSubsetOf(universe)) {
    throw Error(ErrorCode::kNotContained, "start set is not inside universe");
  }
  if (IsDependent(space, start)) {
    throw Error(ErrorCode::kDependentStart, "start set is dependent");
  }
  ElementSet current = start;
  universe.Difference(start).ForEach([&](ElementId id) {
    ElementSet candidate = current.With(id.index);
    if (!IsDependent(space, candidate)) current = std::move(candidate);
  });
  return current;
}

bool IsBasis(const DependenceSpace& space, const ElementSet& set) {
  if (IsDependent(space, set)) return false;
  return Closure(space, set) == space.ground();
}

bool IsMaximalIndependent(const DependenceSpace& space, const ElementSet& set) {
  if (IsDependent(space, set)) return false;
  bool maximal = true;
  space.ground().Difference(set).ForEach([&](ElementId id) {
    if (maximal && !IsDependent(space, set.With(id.index))) maximal = false;
  });
  return maximal;
}

ElementSet FindBasis(const DependenceSpace& space) {
  return ExtendToMaximalIndependent(space, ElementSet(), space.ground());
}

namespace {

std::size_t EffectiveCap(std::size_t max_elements) {
  return std::min<std::size_t>(max_elements, internal::kMaxTableElements);
}

}  // namespace

IndependentFamily EnumerateIndependent(const DependenceSpace& space,
                                       std::size_t max_elements) {
  internal::RequireAtMost(space, EffectiveCap(max_elements),
                          ErrorCode::kTooLarge);
  const auto dependent = internal::DependentTable(space);
  IndependentFamily out;
  for (std::uint64_t mask :
       internal::GradedMasks(static_cast<unsigned>(space.size()))) {
    if (dependent[mask] == 0) out.sets.push_back(ElementSet::FromMask(mask));
  }
  return out;
}

IndependentFamily EnumerateBases(const DependenceSpace& space,
                                 std::size_t max_elements) {
  internal::RequireAtMost(space, EffectiveCap(max_elements),
                          ErrorCode::kTooLarge);
  const auto dependent = internal::DependentTable(space);
  const auto closure = internal::ClosureTable(space);
  const std::uint64_t full = space.ground().ToMask();
  IndependentFamily out;
  for (std::uint64_t mask :
       internal::GradedMasks(static_cast<unsigned>(space.size()))) {
    if (dependent[mask] == 0 && closure[mask] == full) {
      out.sets.push_back(ElementSet::FromMask(mask));
    }
  }
  return out;
}

}  // namespace depspace
