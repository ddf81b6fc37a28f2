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

#include "depspace/kernels/kernels.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define DEPSPACE_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define DEPSPACE_HAVE_AVX2_KERNELS 0
#endif

namespace depspace::kernels {

#if DEPSPACE_HAVE_AVX2_KERNELS
namespace {

#define DEPSPACE_AVX2 __attribute__((target("avx2")))

DEPSPACE_AVX2 inline __m256i Load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

DEPSPACE_AVX2 inline int LaneMask(__m256i v) {
  return _mm256_movemask_pd(_mm256_castsi256_pd(v));
}

DEPSPACE_AVX2 inline std::uint64_t HorizontalOr(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] | lanes[1] | lanes[2] | lanes[3];
}

DEPSPACE_AVX2 std::size_t FirstSubset(const std::uint64_t* family,
                                      std::size_t count, std::size_t words,
                                      const std::uint64_t* target) {
  const __m256i zero = _mm256_setzero_si256();
  if (words == 1) {
    const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target[0]));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
      const __m256i outside = _mm256_andnot_si256(t, Load(family + i));
      const int hits = LaneMask(_mm256_cmpeq_epi64(outside, zero));
      if (hits != 0) return i + __builtin_ctz(hits);
    }
    for (; i < count; ++i) {
      if ((family[i] & ~target[0]) == 0) return i;
    }
    return count;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* d = family + i * words;
    __m256i acc = zero;
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
      acc = _mm256_or_si256(acc, _mm256_andnot_si256(Load(target + w), Load(d + w)));
    }
    std::uint64_t tail = 0;
    for (; w < words; ++w) tail |= d[w] & ~target[w];
    if (tail == 0 && _mm256_testz_si256(acc, acc)) return i;
  }
  return count;
}

DEPSPACE_AVX2 std::size_t FirstCircuitThrough(const std::uint64_t* family,
                                              std::size_t count,
                                              std::size_t words,
                                              const std::uint64_t* target,
                                              std::size_t bit) {
  if (words != 1) {
    return Scalar().first_circuit_through(family, count, words, target, bit);
  }
  const std::uint64_t bit_mask = std::uint64_t{1} << bit;
  const __m256i zero = _mm256_setzero_si256();
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target[0]));
  const __m256i b = _mm256_set1_epi64x(static_cast<long long>(bit_mask));
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i d = Load(family + i);
    const __m256i only_bit = _mm256_cmpeq_epi64(_mm256_andnot_si256(t, d), b);
    const __m256i disjoint = _mm256_cmpeq_epi64(_mm256_and_si256(d, t), zero);
    const int hits = LaneMask(_mm256_andnot_si256(disjoint, only_bit));
    if (hits != 0) return i + __builtin_ctz(hits);
  }
  for (; i < count; ++i) {
    const std::uint64_t d = family[i];
    if ((d & ~target[0]) == bit_mask && (d & target[0]) != 0) return i;
  }
  return count;
}

DEPSPACE_AVX2 void OneMissingUnion(const std::uint64_t* family,
                                   std::size_t count, std::size_t words,
                                   const std::uint64_t* target,
                                   std::uint64_t* out) {
  if (words != 1) {
    Scalar().one_missing_union(family, count, words, target, out);
    return;
  }
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(target[0]));
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i d = Load(family + i);
    const __m256i r = _mm256_andnot_si256(t, d);
    const __m256i none_missing = _mm256_cmpeq_epi64(r, zero);
    const __m256i at_most_one = _mm256_cmpeq_epi64(
        _mm256_and_si256(r, _mm256_sub_epi64(r, one)), zero);
    const __m256i disjoint = _mm256_cmpeq_epi64(_mm256_and_si256(d, t), zero);
    __m256i keep = _mm256_andnot_si256(none_missing, at_most_one);
    keep = _mm256_andnot_si256(disjoint, keep);
    acc = _mm256_or_si256(acc, _mm256_and_si256(keep, r));
  }
  std::uint64_t result = HorizontalOr(acc);
  for (; i < count; ++i) {
    const std::uint64_t d = family[i];
    const std::uint64_t r = d & ~target[0];
    if (r != 0 && (r & (r - 1)) == 0 && (d & target[0]) != 0) result |= r;
  }
  out[0] |= result;
}

DEPSPACE_AVX2 std::uint64_t TransitivityRow(const std::uint64_t* closures,
                                            std::size_t count,
                                            std::uint64_t antecedent,
                                            std::uint64_t consequent) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i a = _mm256_set1_epi64x(static_cast<long long>(antecedent));
  const __m256i c = _mm256_set1_epi64x(static_cast<long long>(consequent));
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i cl = Load(closures + i);
    const __m256i covered = _mm256_cmpeq_epi64(_mm256_andnot_si256(cl, a), zero);
    acc = _mm256_or_si256(
        acc, _mm256_and_si256(covered, _mm256_andnot_si256(cl, c)));
  }
  std::uint64_t result = HorizontalOr(acc);
  for (; i < count; ++i) {
    if ((antecedent & ~closures[i]) == 0) result |= consequent & ~closures[i];
  }
  return result;
}

DEPSPACE_AVX2 void OrInto(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(Load(dst + i), Load(src + i)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

#undef DEPSPACE_AVX2

constexpr KernelTable kAvx2{
    "avx2", &FirstSubset, &FirstCircuitThrough, &OneMissingUnion,
    &TransitivityRow, &OrInto,
};

}  // namespace

const KernelTable* Avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* Avx2() { return nullptr; }

#endif  // DEPSPACE_HAVE_AVX2_KERNELS

}  // namespace depspace::kernels
