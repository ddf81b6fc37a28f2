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

#ifndef DEPSPACE_TESTS_TEST_SUPPORT_H_
#define DEPSPACE_TESTS_TEST_SUPPORT_H_

// Named fixture spaces and brute-force oracles. The oracles work on plain
// 64-bit masks with straightforward loops and share no code with the
// library's kernels or lookup tables.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "depspace/space.h"

namespace depspace::testing {

inline DependenceSpace Space1() {
  return BuildSpace({"a", "b", "c", "d"}, {{"a", "b", "c"}});
}

// Two disjoint edges 1-2 and 3-4.
inline DependenceSpace Cliques() {
  return BuildSpace({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}});
}

// Path x - a - b.
inline DependenceSpace P3Graph() {
  return BuildSpace({"x", "a", "b"}, {{"x", "a"}, {"a", "b"}});
}

inline std::vector<std::uint64_t> CircuitMasks(const DependenceSpace& space) {
  std::vector<std::uint64_t> out;
  for (const auto& member : space.delta()) {
    std::uint64_t mask = 0;
    for (std::size_t i : member.ToIndices()) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
  }
  return out;
}

struct Oracle {
  explicit Oracle(const DependenceSpace& space)
      : n(static_cast<unsigned>(space.size())),
        circuits(CircuitMasks(space)) {}

  std::uint64_t Full() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  bool Dependent(std::uint64_t a) const {
    for (std::uint64_t d : circuits) {
      if ((d & a) == d) return true;
    }
    return false;
  }

  bool DependsOn(unsigned x, std::uint64_t a) const {
    const std::uint64_t bit = std::uint64_t{1} << x;
    if (a & bit) return true;
    for (std::uint64_t d : circuits) {
      if ((d & bit) && std::popcount(d) >= 2 && ((d & ~bit) & ~a) == 0) {
        return true;
      }
    }
    return false;
  }

  std::uint64_t Closure(std::uint64_t a) const {
    std::uint64_t out = 0;
    for (unsigned x = 0; x < n; ++x) {
      if (DependsOn(x, a)) out |= std::uint64_t{1} << x;
    }
    return out;
  }

  bool Basis(std::uint64_t a) const {
    return !Dependent(a) && Closure(a) == Full();
  }

  bool Transitive() const {
    for (std::uint64_t a = 0; a <= Full(); ++a) {
      for (std::uint64_t b = 0; b <= Full(); ++b) {
        bool all = true;
        for (unsigned i = 0; i < n && all; ++i) {
          if ((a >> i) & 1) all = DependsOn(i, b);
        }
        if (!all) continue;
        for (unsigned x = 0; x < n; ++x) {
          if (DependsOn(x, a) && !DependsOn(x, b)) return false;
        }
      }
    }
    return true;
  }

  unsigned n;
  std::vector<std::uint64_t> circuits;
};

// Masks ordered by size, then lexicographically on ascending indices.
inline void SortGraded(std::vector<std::uint64_t>& masks) {
  auto indices = [](std::uint64_t m) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i) {
      if ((m >> i) & 1) v.push_back(i);
    }
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) < std::popcount(b);
    }
    return indices(a) < indices(b);
  });
}

inline std::vector<std::uint64_t> ToMasks(
    const std::vector<ElementSet>& sets) {
  std::vector<std::uint64_t> out;
  for (const auto& s : sets) out.push_back(s.ToMask());
  return out;
}

}  // namespace depspace::testing

#endif  // DEPSPACE_TESTS_TEST_SUPPORT_H_
