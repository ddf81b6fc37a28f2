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

#ifndef DEPSPACE_SUBSET_TABLES_H_
#define DEPSPACE_SUBSET_TABLES_H_

// Whole-powerset lookup tables for small spaces (ground set of at most 20
// elements), indexed by subset mask. Built with the subset-sum OR transform
// rather than per-subset delta scans; the per-subset routes in relations.h
// stay as the independent cross-check.

#include <cstdint>
#include <vector>

#include "depspace/error.h"
#include "depspace/space.h"

namespace depspace::internal {

inline constexpr unsigned kMaxTableElements = 20;

// dependent[m] != 0 iff some delta member is a subset of m.
std::vector<std::uint64_t> DependentTable(const DependenceSpace& space);

// closure[m] is the one-step closure of m as a mask.
std::vector<std::uint64_t> ClosureTable(const DependenceSpace& space);

// All masks over n elements, ordered by size then lexicographically.
std::vector<std::uint64_t> GradedMasks(unsigned n);

// Throws `code` unless space.size() <= limit.
void RequireAtMost(const DependenceSpace& space, std::size_t limit,
                   ErrorCode code);

}  // namespace depspace::internal

#endif  // DEPSPACE_SUBSET_TABLES_H_
