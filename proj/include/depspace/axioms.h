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

#ifndef DEPSPACE_AXIOMS_H_
#define DEPSPACE_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "depspace/element_set.h"
#include "depspace/space.h"

namespace depspace {

enum class AxiomName {
  kTransitivity,
  kHereditary,
  kMaximalityEquivalence,
  kSupersetDependence,
  kChainClosure,
};

std::string_view AxiomLabel(AxiomName name);

struct CheckMode {
  enum class Kind { kExhaustive, kSampled };

  Kind kind = Kind::kExhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static CheckMode Exhaustive() { return {}; }
  static CheckMode Sampled(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::kSampled, samples, seed};
  }

  friend bool operator==(const CheckMode&, const CheckMode&) = default;
};

enum class Verdict { kPass, kFail };

// What each field means depends on the axiom:
//   Transitivity          x ~ A, every a in A ~ B, but not x ~ B.
//   Hereditary            A independent, B a dependent subset of A.
//   SupersetDependence    A dependent, B an independent superset of A.
//   MaximalityEquivalence A a basis with B an independent proper superset,
//                         or A maximal independent with x not depending on A.
//   ChainClosure          A the dependent union of the chain.
struct CounterexampleWitness {
  std::optional<ElementId> x;
  ElementSet a;
  std::optional<ElementSet> b;

  friend bool operator==(const CounterexampleWitness&,
                         const CounterexampleWitness&) = default;
};

struct AxiomReport {
  AxiomName axiom = AxiomName::kTransitivity;
  CheckMode mode;
  Verdict verdict = Verdict::kPass;
  std::vector<CounterexampleWitness> witnesses;
  // Cases examined: (x, A, B) triples, sets or set pairs depending on axiom.
  std::uint64_t examined = 0;

  bool passed() const { return verdict == Verdict::kPass; }
};

struct CheckOptions {
  std::size_t witness_cap = 10;
  // Largest ground set the exhaustive checks accept.
  std::size_t exhaustive_limit = 12;
};

// Exhaustive mode scans every (x, A, B) with A and B ranging over all
// subsets, including the empty set and dependent sets, and reports the first
// witnesses in (x, A, B) order, sets ordered by size then lexicographically.
//
// Sampled mode draws `samples` triples from a seeded generator. B is
// uniform; A is a uniform subset of the closure of B, so the hypothesis
// "every a in A depends on B" always holds; x is drawn from closure(A) - A
// when that is nonempty. Any reported triple is a genuine counterexample.
//
// Throws kTooLargeForExhaustive.
AxiomReport CheckTransitivity(const DependenceSpace& space, CheckMode mode,
                              const CheckOptions& options = {});

AxiomReport CheckHereditary(const DependenceSpace& space,
                            const CheckOptions& options = {});

AxiomReport CheckSupersetDependence(const DependenceSpace& space,
                                    const CheckOptions& options = {});

// Compares the bases against the maximal independent sets.
AxiomReport CheckMaximalityEquivalence(const DependenceSpace& space,
                                       const CheckOptions& options = {});

struct ChainClosureResult {
  AxiomReport report;
  ElementSet chain_union;
};

// Throws kNotAChain when two members are incomparable and kDependentMember
// when a member is dependent.
ChainClosureResult CheckChainClosure(const DependenceSpace& space,
                                     const std::vector<ElementSet>& chain);

// Recomputes the witness's defining conditions from scratch.
bool ValidateWitness(const DependenceSpace& space, AxiomName axiom,
                     const CounterexampleWitness& witness);

}  // namespace depspace

#endif  // DEPSPACE_AXIOMS_H_
