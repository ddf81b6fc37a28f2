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

#include <cstdlib>
#include <string_view>

#include "depspace/kernels/kernels.h"

namespace depspace::kernels {
namespace {

const KernelTable& Select() {
  const char* forced = std::getenv("DEPSPACE_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return Scalar();
  }
  if (const KernelTable* avx2 = Avx2()) return *avx2;
  return Scalar();
}

}  // namespace

const KernelTable& Active() {
  static const KernelTable& table = Select();
  return table;
}

void SubsetOrTransform(std::uint64_t* table, unsigned n, const KernelTable& k) {
  const std::size_t size = std::size_t{1} << n;
  for (unsigned bit = 0; bit < n; ++bit) {
    const std::size_t half = std::size_t{1} << bit;
    for (std::size_t base = 0; base < size; base += 2 * half) {
      k.or_into(table + base + half, table + base, half);
    }
  }
}

}  // namespace depspace::kernels
