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

#include "depspace/axioms.h"

#include <algorithm>
#include <random>

#include "depspace/bases.h"
#include "depspace/error.h"
#include "depspace/kernels/kernels.h"
#include "depspace/relations.h"
#include "random.h"
#include "subset_tables.h"

namespace depspace {
namespace {

constexpr std::uint64_t Bit(std::size_t i) { return std::uint64_t{1} << i; }

unsigned RequireExhaustive(const DependenceSpace& space,
                           const CheckOptions& options) {
  internal::RequireAtMost(
      space, std::min<std::size_t>(options.exhaustive_limit,
                                   internal::kMaxTableElements),
      ErrorCode::kTooLargeForExhaustive);
  return static_cast<unsigned>(space.size());
}

// Dependence of every subset, one delta scan per subset.
std::vector<bool> ScanDependence(const DependenceSpace& space, unsigned n) {
  std::vector<bool> dependent(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < dependent.size(); ++m) {
    dependent[m] = IsDependent(space, ElementSet::FromMask(m)).has_value();
  }
  return dependent;
}

AxiomReport Finish(AxiomReport report) {
  report.verdict = report.witnesses.empty() ? Verdict::kPass : Verdict::kFail;
  return report;
}

AxiomReport ExhaustiveTransitivity(const DependenceSpace& space,
                                   const CheckOptions& options) {
  const unsigned n = RequireExhaustive(space, options);
  const auto closure = internal::ClosureTable(space);
  const auto& k = kernels::Active();
  const std::size_t count = closure.size();

  // violated[A]: every x for which some B makes (x, A, B) a counterexample.
  std::vector<std::uint64_t> violated(count);
  std::uint64_t any = 0;
  for (std::size_t a = 0; a < count; ++a) {
    violated[a] = k.transitivity_row(closure.data(), count, a, closure[a]);
    any |= violated[a];
  }

  AxiomReport report;
  report.axiom = AxiomName::kTransitivity;
  report.mode = CheckMode::Exhaustive();
  report.examined = static_cast<std::uint64_t>(n) * count * count;
  if (any == 0 || options.witness_cap == 0) return Finish(std::move(report));

  const auto order = internal::GradedMasks(n);
  for (std::size_t x = 0; x < n; ++x) {
    if ((any & Bit(x)) == 0) continue;
    for (std::uint64_t a : order) {
      if ((violated[a] & Bit(x)) == 0) continue;
      for (std::uint64_t b : order) {
        if ((a & ~closure[b]) != 0 || (closure[b] & Bit(x)) != 0) continue;
        report.witnesses.push_back({ElementId{x}, ElementSet::FromMask(a),
                                    ElementSet::FromMask(b)});
        if (report.witnesses.size() >= options.witness_cap) {
          return Finish(std::move(report));
        }
      }
    }
  }
  return Finish(std::move(report));
}

ElementSet RandomSubset(std::mt19937_64& rng, const ElementSet& of) {
  std::vector<std::uint64_t> words(of.words().begin(), of.words().end());
  for (std::uint64_t& w : words) w &= rng();
  return ElementSet::FromWords(words);
}

ElementId NthMember(const ElementSet& set, std::uint64_t n) {
  const auto indices = set.ToIndices();
  return ElementId{indices.at(n)};
}

AxiomReport SampledTransitivity(const DependenceSpace& space, CheckMode mode,
                                const CheckOptions& options) {
  AxiomReport report;
  report.axiom = AxiomName::kTransitivity;
  report.mode = mode;
  report.examined = mode.samples;
  if (space.size() == 0) return Finish(std::move(report));

  std::mt19937_64 rng(mode.seed);
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    const ElementSet b = RandomSubset(rng, space.ground());
    const ElementSet b_closure = Closure(space, b);
    const ElementSet a = RandomSubset(rng, b_closure);
    const ElementSet candidates = Closure(space, a).Difference(a);
    const ElementId x =
        candidates.Empty()
            ? ElementId{internal::UniformBelow(rng, space.size())}
            : NthMember(candidates,
                        internal::UniformBelow(rng, candidates.Size()));
    if (!DependsOn(space, x, a) || b_closure.Contains(x)) continue;
    CounterexampleWitness witness{x, a, b};
    if (std::find(report.witnesses.begin(), report.witnesses.end(), witness) ==
        report.witnesses.end()) {
      report.witnesses.push_back(std::move(witness));
      if (report.witnesses.size() >= options.witness_cap) break;
    }
  }
  return Finish(std::move(report));
}

}  // namespace

std::string_view AxiomLabel(AxiomName name) {
  switch (name) {
    case AxiomName::kTransitivity: return "Transitivity";
    case AxiomName::kHereditary: return "Hereditary";
    case AxiomName::kMaximalityEquivalence: return "MaximalityEquivalence";
    case AxiomName::kSupersetDependence: return "SupersetDependence";
    case AxiomName::kChainClosure: return "ChainClosure";
  }
  return "Unknown";
}

AxiomReport CheckTransitivity(const DependenceSpace& space, CheckMode mode,
                              const CheckOptions& options) {
  if (mode.kind == CheckMode::Kind::kExhaustive) {
    return ExhaustiveTransitivity(space, options);
  }
  return SampledTransitivity(space, mode, options);
}

AxiomReport CheckHereditary(const DependenceSpace& space,
                            const CheckOptions& options) {
  const unsigned n = RequireExhaustive(space, options);
  const auto dependent = ScanDependence(space, n);
  AxiomReport report;
  report.axiom = AxiomName::kHereditary;
  for (std::uint64_t a : internal::GradedMasks(n)) {
    if (dependent[a]) continue;
    // Every submask of a, including a itself and the empty set.
    for (std::uint64_t s = a;; s = (s - 1) & a) {
      ++report.examined;
      if (dependent[s] && report.witnesses.size() < options.witness_cap) {
        report.witnesses.push_back(
            {std::nullopt, ElementSet::FromMask(a), ElementSet::FromMask(s)});
      }
      if (s == 0) break;
    }
  }
  return Finish(std::move(report));
}

AxiomReport CheckSupersetDependence(const DependenceSpace& space,
                                    const CheckOptions& options) {
  const unsigned n = RequireExhaustive(space, options);
  const auto dependent = ScanDependence(space, n);
  const std::uint64_t full = space.ground().ToMask();
  AxiomReport report;
  report.axiom = AxiomName::kSupersetDependence;
  for (std::uint64_t a : internal::GradedMasks(n)) {
    if (!dependent[a]) continue;
    const std::uint64_t rest = full & ~a;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      ++report.examined;
      if (!dependent[a | s] && report.witnesses.size() < options.witness_cap) {
        report.witnesses.push_back({std::nullopt, ElementSet::FromMask(a),
                                    ElementSet::FromMask(a | s)});
      }
      if (s == 0) break;
    }
  }
  return Finish(std::move(report));
}

AxiomReport CheckMaximalityEquivalence(const DependenceSpace& space,
                                       const CheckOptions& options) {
  const unsigned n = RequireExhaustive(space, options);
  const auto dependent = ScanDependence(space, n);
  AxiomReport report;
  report.axiom = AxiomName::kMaximalityEquivalence;
  for (std::uint64_t a : internal::GradedMasks(n)) {
    ++report.examined;
    if (dependent[a]) continue;
    const ElementSet set = ElementSet::FromMask(a);
    std::optional<std::size_t> addable;
    for (std::size_t u = 0; u < n && !addable; ++u) {
      if ((a & Bit(u)) == 0 && !dependent[a | Bit(u)]) addable = u;
    }
    const ElementSet closure = Closure(space, set);
    const bool basis = closure == space.ground();
    if (basis == !addable.has_value()) continue;
    if (report.witnesses.size() >= options.witness_cap) continue;
    if (basis) {
      report.witnesses.push_back(
          {std::nullopt, set, ElementSet::FromMask(a | Bit(*addable))});
    } else {
      const auto missing = space.ground().Difference(closure).ToIndices();
      report.witnesses.push_back({ElementId{missing.front()}, set,
                                  std::nullopt});
    }
  }
  return Finish(std::move(report));
}

ChainClosureResult CheckChainClosure(const DependenceSpace& space,
                                     const std::vector<ElementSet>& chain) {
  for (const ElementSet& member : chain) space.RequireMember(member);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (!chain[i].IsSubsetOf(chain[j]) && !chain[j].IsSubsetOf(chain[i])) {
        throw Error(ErrorCode::kNotAChain,
                    "members " + std::to_string(i) + " and " +
                        std::to_string(j) + " are incomparable");
      }
    }
  }
  ChainClosureResult result;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (IsDependent(space, chain[i])) {
      throw Error(ErrorCode::kDependentMember,
                  "member " + std::to_string(i) + " is dependent");
    }
    result.chain_union = result.chain_union.Union(chain[i]);
  }
  result.report.axiom = AxiomName::kChainClosure;
  result.report.examined = chain.size();
  if (IsDependent(space, result.chain_union)) {
    result.report.witnesses.push_back(
        {std::nullopt, result.chain_union, std::nullopt});
  }
  result.report = Finish(std::move(result.report));
  return result;
}

bool ValidateWitness(const DependenceSpace& space, AxiomName axiom,
                     const CounterexampleWitness& w) {
  const auto independent = [&](const ElementSet& s) {
    return !IsDependent(space, s).has_value();
  };
  switch (axiom) {
    case AxiomName::kTransitivity: {
      if (!w.x || !w.b) return false;
      bool all = true;
      w.a.ForEach([&](ElementId a) {
        all = all && DependsOn(space, a, *w.b).has_value();
      });
      return all && DependsOn(space, *w.x, w.a).has_value() &&
             !DependsOn(space, *w.x, *w.b).has_value();
    }
    case AxiomName::kHereditary:
      return w.b && w.b->IsSubsetOf(w.a) && independent(w.a) &&
             !independent(*w.b);
    case AxiomName::kSupersetDependence:
      return w.b && w.a.IsSubsetOf(*w.b) && !independent(w.a) &&
             independent(*w.b);
    case AxiomName::kMaximalityEquivalence:
      if (w.b) {
        return IsBasis(space, w.a) && w.a.IsSubsetOf(*w.b) && w.a != *w.b &&
               independent(*w.b);
      }
      return w.x && IsMaximalIndependent(space, w.a) &&
             !DependsOn(space, *w.x, w.a).has_value();
    case AxiomName::kChainClosure:
      return !independent(w.a);
  }
  return false;
}

}  // namespace depspace
