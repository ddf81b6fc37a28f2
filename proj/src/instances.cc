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

#include "depspace/instances.h"

#include <bit>
#include <random>
#include <set>

#include "depspace/error.h"
#include "random.h"

namespace depspace {

DependenceSpace GraphSpace(const GraphSpec& graph) {
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::vector<std::string>> delta;
  for (const auto& [u, v] : graph.edges) {
    if (u == v) throw Error(ErrorCode::kSelfLoop, u);
    auto key = u < v ? std::pair(u, v) : std::pair(v, u);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kDuplicateEdge, u + "-" + v);
    }
    delta.push_back({u, v});
  }
  return BuildSpace(graph.vertices, delta);
}

DependenceSpace CliqueUnionSpace(const std::vector<std::size_t>& block_sizes) {
  GraphSpec graph;
  std::size_t next = 1;
  for (std::size_t size : block_sizes) {
    const std::size_t first = next;
    for (std::size_t i = 0; i < size; ++i) {
      graph.vertices.push_back(std::to_string(next + i));
      for (std::size_t j = first; j < next + i; ++j) {
        graph.edges.emplace_back(std::to_string(j), std::to_string(next + i));
      }
    }
    next += size;
  }
  return GraphSpace(graph);
}

std::string VectorName(const Vector2& v) {
  return std::to_string(v.x) + ":" + std::to_string(v.y);
}

DependenceSpace ParallelVectorSpace(const std::vector<Vector2>& vectors,
                                    bool allow_zero) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Vector2& v = vectors[i];
    if (v.x < -kMaxVectorComponent || v.x > kMaxVectorComponent ||
        v.y < -kMaxVectorComponent || v.y > kMaxVectorComponent) {
      throw Error(ErrorCode::kInvalidArgument,
                  "component out of range in " + VectorName(v));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vectors[j] == v) {
        throw Error(ErrorCode::kDuplicateVector, VectorName(v));
      }
    }
    names.push_back(VectorName(v));
  }
  std::vector<std::vector<std::string>> delta;
  const std::size_t n = vectors.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector2& v = vectors[i];
    if (allow_zero && v.x == 0 && v.y == 0) delta.push_back({names[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector2& w = vectors[j];
      if (v.x * w.y - v.y * w.x == 0) delta.push_back({names[i], names[j]});
      for (std::size_t k = j + 1; k < n; ++k) {
        delta.push_back({names[i], names[j], names[k]});
      }
    }
  }
  return BuildSpace(names, delta, allow_zero ? 1 : 2);
}

DependenceSpace RepetitionSpace(std::uint64_t alphabet_size,
                                std::uint64_t word_length) {
  if (alphabet_size == 0 || word_length == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "alphabet size and word length must be positive");
  }
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < word_length; ++i) {
    if (count * alphabet_size > kMaxRepetitionWords) {
      throw Error(ErrorCode::kTooLarge,
                  "more than " + std::to_string(kMaxRepetitionWords) +
                      " words");
    }
    count *= alphabet_size;
  }
  const bool digits = alphabet_size <= 10;
  std::vector<std::string> names;
  // Symbols occurring in each word, as a bitset over the alphabet.
  std::vector<std::vector<bool>> symbols;
  for (std::uint64_t w = 0; w < count; ++w) {
    std::vector<std::uint64_t> word(word_length);
    std::uint64_t rest = w;
    for (std::uint64_t i = word_length; i-- > 0;) {
      word[i] = rest % alphabet_size;
      rest /= alphabet_size;
    }
    std::string name;
    std::vector<bool> used(alphabet_size, false);
    for (std::uint64_t i = 0; i < word_length; ++i) {
      if (!digits && i > 0) name += '.';
      name += std::to_string(word[i]);
      used[word[i]] = true;
    }
    names.push_back(std::move(name));
    symbols.push_back(std::move(used));
  }
  std::vector<std::vector<std::string>> delta;
  for (std::uint64_t u = 0; u < count; ++u) {
    for (std::uint64_t v = u + 1; v < count; ++v) {
      for (std::uint64_t s = 0; s < alphabet_size; ++s) {
        if (symbols[u][s] && symbols[v][s]) {
          delta.push_back({names[u], names[v]});
          break;
        }
      }
    }
  }
  return BuildSpace(names, delta);
}

DependenceSpace RandomSpace(std::size_t n, std::size_t circuit_count,
                            std::size_t max_circuit_size, std::uint64_t seed) {
  if (n == 0 || n > kMaxRandomElements) {
    throw Error(ErrorCode::kTooLarge,
                "element count must be in [1, " +
                    std::to_string(kMaxRandomElements) + "], got " +
                    std::to_string(n));
  }
  if (max_circuit_size < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "maximum circuit size must be at least 2");
  }
  std::vector<std::uint64_t> pool;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    if (size >= 2 && size <= max_circuit_size) pool.push_back(m);
  }
  if (circuit_count > pool.size()) {
    throw Error(ErrorCode::kInfeasibleCount,
                std::to_string(circuit_count) + " circuits requested, " +
                    std::to_string(pool.size()) + " exist");
  }
  // Partial Fisher-Yates: the first circuit_count slots become a uniform
  // sample without replacement.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < circuit_count; ++i) {
    const std::size_t j = i + internal::UniformBelow(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::vector<std::string>> delta;
  for (std::size_t i = 0; i < circuit_count; ++i) {
    std::vector<std::string> member;
    for (std::size_t e = 0; e < n; ++e) {
      if ((pool[i] >> e) & 1) member.push_back(names[e]);
    }
    delta.push_back(std::move(member));
  }
  return BuildSpace(names, delta);
}

}  // namespace depspace
