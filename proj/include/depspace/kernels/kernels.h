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

#ifndef DEPSPACE_KERNELS_KERNELS_H_
#define DEPSPACE_KERNELS_KERNELS_H_

// Bitset inner loops shared by the relation, basis and axiom code. Each
// kernel has a portable scalar reference and, where the CPU allows, an AVX2
// variant; `Active()` picks one at first use. All variants must return
// identical results for identical inputs.
//
// A "family" is `count` bitsets of `words` 64-bit words each, stored
// back-to-back. A "target" is a single bitset of `words` words.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace depspace::kernels {

struct KernelTable {
  std::string_view name;

  // Index of the first member D with D subset of target, or `count`.
  std::size_t (*first_subset)(const std::uint64_t* family, std::size_t count,
                              std::size_t words, const std::uint64_t* target);

  // Index of the first member D with D - target == {bit} and D meeting
  // target, i.e. D has at least two elements, contains `bit`, and all its
  // other elements lie in target. `bit` must not be in target. Returns
  // `count` when there is none.
  std::size_t (*first_circuit_through)(const std::uint64_t* family,
                                       std::size_t count, std::size_t words,
                                       const std::uint64_t* target,
                                       std::size_t bit);

  // out |= (D - target) for every member D that meets target and misses it
  // by exactly one element. `out` has `words` words.
  void (*one_missing_union)(const std::uint64_t* family, std::size_t count,
                            std::size_t words, const std::uint64_t* target,
                            std::uint64_t* out);

  // OR over i of (consequent & ~closures[i]) restricted to the i with
  // antecedent subset of closures[i].
  std::uint64_t (*transitivity_row)(const std::uint64_t* closures,
                                    std::size_t count, std::uint64_t antecedent,
                                    std::uint64_t consequent);

  // dst[i] |= src[i].
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
};

const KernelTable& Scalar();

// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* Avx2();

// The table used by the library: AVX2 when available unless the environment
// variable DEPSPACE_KERNELS is set to "scalar".
const KernelTable& Active();

// In-place subset-sum OR transform over 2^n entries:
// table[m] := OR of table[s] over all s subset of m.
void SubsetOrTransform(std::uint64_t* table, unsigned n,
                       const KernelTable& k = Active());

}  // namespace depspace::kernels

#endif  // DEPSPACE_KERNELS_KERNELS_H_
