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

#include <bit>

#include "depspace/kernels/kernels.h"

namespace depspace::kernels {
namespace {

std::size_t FirstSubset(const std::uint64_t* family, std::size_t count,
                        std::size_t words, const std::uint64_t* target) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* d = family + i * words;
    bool subset = true;
    for (std::size_t w = 0; w < words && subset; ++w) {
      subset = (d[w] & ~target[w]) == 0;
    }
    if (subset) return i;
  }
  return count;
}

std::size_t FirstCircuitThrough(const std::uint64_t* family, std::size_t count,
                                std::size_t words, const std::uint64_t* target,
                                std::size_t bit) {
  const std::size_t bit_word = bit / 64;
  const std::uint64_t bit_mask = std::uint64_t{1} << (bit % 64);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* d = family + i * words;
    bool ok = true;
    bool meets = false;
    for (std::size_t w = 0; w < words && ok; ++w) {
      const std::uint64_t expected = w == bit_word ? bit_mask : 0;
      ok = (d[w] & ~target[w]) == expected;
      meets = meets || (d[w] & target[w]) != 0;
    }
    if (ok && meets) return i;
  }
  return count;
}

void OneMissingUnion(const std::uint64_t* family, std::size_t count,
                     std::size_t words, const std::uint64_t* target,
                     std::uint64_t* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* d = family + i * words;
    int missing = 0;
    std::size_t missing_word = 0;
    bool meets = false;
    for (std::size_t w = 0; w < words && missing <= 1; ++w) {
      const std::uint64_t r = d[w] & ~target[w];
      if (r != 0) {
        missing += std::popcount(r);
        missing_word = w;
      }
      meets = meets || (d[w] & target[w]) != 0;
    }
    if (missing == 1 && meets) {
      out[missing_word] |= d[missing_word] & ~target[missing_word];
    }
  }
}

std::uint64_t TransitivityRow(const std::uint64_t* closures, std::size_t count,
                              std::uint64_t antecedent,
                              std::uint64_t consequent) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if ((antecedent & ~closures[i]) == 0) acc |= consequent & ~closures[i];
  }
  return acc;
}

void OrInto(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

constexpr KernelTable kScalar{
    "scalar", &FirstSubset, &FirstCircuitThrough, &OneMissingUnion,
    &TransitivityRow, &OrInto,
};

}  // namespace

const KernelTable& Scalar() { return kScalar; }

}  // namespace depspace::kernels
