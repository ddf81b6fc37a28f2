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

#include "subset_tables.h"

#include <cassert>

#include "depspace/error.h"
#include "depspace/kernels/kernels.h"

namespace depspace::internal {

std::vector<std::uint64_t> DependentTable(const DependenceSpace& space) {
  const unsigned n = static_cast<unsigned>(space.size());
  assert(n <= kMaxTableElements);
  std::vector<std::uint64_t> table(std::size_t{1} << n, 0);
  for (const ElementSet& member : space.delta()) table[member.ToMask()] = 1;
  kernels::SubsetOrTransform(table.data(), n);
  return table;
}

std::vector<std::uint64_t> ClosureTable(const DependenceSpace& space) {
  const unsigned n = static_cast<unsigned>(space.size());
  assert(n <= kMaxTableElements);
  std::vector<std::uint64_t> table(std::size_t{1} << n, 0);
  // Seed each "rest of a circuit" with the element it pulls in, then spread
  // to every superset of that rest.
  for (const ElementSet& member : space.delta()) {
    const std::uint64_t mask = member.ToMask();
    if (member.Size() < 2) continue;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const std::uint64_t x = bits & (~bits + 1);
      table[mask & ~x] |= x;
    }
  }
  kernels::SubsetOrTransform(table.data(), n);
  for (std::size_t m = 0; m < table.size(); ++m) table[m] |= m;
  return table;
}

std::vector<std::uint64_t> GradedMasks(unsigned n) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  std::vector<unsigned> pick;
  for (unsigned k = 0; k <= n; ++k) {
    pick.resize(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (unsigned i : pick) mask |= std::uint64_t{1} << i;
      out.push_back(mask);
      // Advance to the next k-combination in lexicographic order.
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && pick[i] == n - k + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

void RequireAtMost(const DependenceSpace& space, std::size_t limit,
                   ErrorCode code) {
  if (space.size() > limit) {
    throw Error(code,
                "ground set has " + std::to_string(space.size()) +
                    " elements, limit is " + std::to_string(limit));
  }
}

}  // namespace depspace::internal
