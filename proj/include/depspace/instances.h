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

#ifndef DEPSPACE_INSTANCES_H_
#define DEPSPACE_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "depspace/space.h"

namespace depspace {

struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Vertices as elements, edges as the delta members. A vertex set containing
// an edge is dependent, and x depends on A when x is in A or linked to a
// vertex of A. Throws kSelfLoop, kDuplicateEdge (either orientation) and
// the BuildSpace errors.
DependenceSpace GraphSpace(const GraphSpec& graph);

// Disjoint union of cliques, one per block; vertices are named 1..n in block
// order.
DependenceSpace CliqueUnionSpace(const std::vector<std::size_t>& block_sizes);

inline constexpr std::int64_t kMaxVectorComponent = 1'000'000;

struct Vector2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Vector2&, const Vector2&) = default;
};

// Element name for a vector: "x:y".
std::string VectorName(const Vector2& v);

// Plane vectors with exact integer parallelism. Delta holds every parallel
// pair (zero cross product) and every 3-element subset; with `allow_zero`
// the minimum circuit size drops to 1 and {0} is added when the zero vector
// is present. Throws kDuplicateVector, and kInvalidArgument for a component
// outside +-kMaxVectorComponent.
DependenceSpace ParallelVectorSpace(const std::vector<Vector2>& vectors,
                                    bool allow_zero);

inline constexpr std::uint64_t kMaxRepetitionWords = 4096;

// All words of `word_length` symbols over an alphabet of `alphabet_size`
// symbols. Two words form a delta member when some symbol occurs in both.
// Symbols are digits for alphabets of at most ten, otherwise decimal numbers
// joined by '.'. Throws kTooLarge above kMaxRepetitionWords words.
DependenceSpace RepetitionSpace(std::uint64_t alphabet_size,
                                std::uint64_t word_length);

inline constexpr std::size_t kMaxRandomElements = 16;

// Elements e0..e{n-1} and `circuit_count` distinct delta members drawn
// uniformly, without replacement, from all subsets with between 2 and
// `max_circuit_size` elements. Identical arguments give identical spaces on
// every platform. Throws kTooLarge, kInfeasibleCount, kInvalidArgument.
DependenceSpace RandomSpace(std::size_t n, std::size_t circuit_count,
                            std::size_t max_circuit_size, std::uint64_t seed);

}  // namespace depspace

#endif  // DEPSPACE_INSTANCES_H_
