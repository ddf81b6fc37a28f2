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

// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "depspace/axioms.h"
#include "depspace/bases.h"
#include "depspace/cli.h"
#include "depspace/exchange.h"
#include "depspace/instances.h"
#include "depspace/relations.h"
#include "depspace/space_file.h"
#include "test_support.h"

namespace depspace {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::size_t PoolSize(std::size_t n, std::size_t max_size) {
  std::size_t total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(m));
    if (k >= 2 && k <= max_size) ++total;
  }
  return total;
}

// Seeded random spaces with 1..max_n elements and a spread of circuit counts
// and sizes.
std::vector<DependenceSpace> Corpus(std::size_t count, std::size_t max_n,
                                    std::uint64_t base_seed) {
  std::vector<DependenceSpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % max_n;
    const std::size_t max_size = 2 + (i / max_n) % 3;
    const std::size_t pool = PoolSize(n, max_size);
    const std::size_t circuits = (i * 7 + i / max_n) % (std::min<std::size_t>(pool, 10) + 1);
    out.push_back(RandomSpace(n, circuits, max_size, base_seed + i));
  }
  return out;
}

std::vector<DependenceSpace> Named() {
  return {testing::Space1(), testing::Cliques(), testing::P3Graph()};
}

// 1. Properties (2) and (5) on 200 random spaces, |S| <= 8, under 5 s.
Outcome HereditarySuperset() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  const auto corpus = Corpus(200, 8, 1000);
  for (const auto& s : corpus) {
    const auto h = CheckHereditary(s);
    const auto p = CheckSupersetDependence(s);
    violations += h.witnesses.size() + p.witnesses.size();
  }
  const double t = Seconds(start);
  return {violations == 0 && t < 5.0,
          std::to_string(corpus.size()) + " spaces, " +
              std::to_string(violations) + " violations, " +
              std::to_string(t) + " s (limit 5 s)"};
}

// 2. Bases == maximal independent sets on the same corpus plus the named
// spaces, under 10 s.
Outcome MaximalityEquivalence() {
  const auto start = Clock::now();
  auto corpus = Corpus(200, 8, 1000);
  for (auto& s : Named()) corpus.push_back(std::move(s));
  std::size_t discrepancies = 0;
  for (const auto& s : corpus) {
    discrepancies += CheckMaximalityEquivalence(s).witnesses.size();
    IndependentFamily maximal;
    for (const auto& set : EnumerateIndependent(s).sets) {
      if (IsMaximalIndependent(s, set)) maximal.sets.push_back(set);
    }
    if (!(maximal == EnumerateBases(s))) ++discrepancies;
  }
  const double t = Seconds(start);
  return {discrepancies == 0 && t < 10.0,
          std::to_string(corpus.size()) + " spaces, " +
              std::to_string(discrepancies) + " discrepancies, " +
              std::to_string(t) + " s (limit 10 s)"};
}

// 3. Every exchange verifies on every transitive random space, |S| <= 7,
// under 60 s.
Outcome ExchangeCertificates() {
  const auto start = Clock::now();
  std::size_t transitive = 0;
  std::size_t exchanges = 0;
  std::size_t failures = 0;
  for (const auto& s : Corpus(700, 7, 5000)) {
    if (!CheckTransitivity(s, CheckMode::Exhaustive()).passed()) continue;
    ++transitive;
    const auto independent = EnumerateIndependent(s).sets;
    for (const auto& a : EnumerateBases(s).sets) {
      for (const auto& b : independent) {
        ++exchanges;
        if (!VerifyExchange(s, SteinitzExchange(s, a, b))) ++failures;
      }
    }
  }
  const double t = Seconds(start);
  return {failures == 0 && transitive > 0 && t < 60.0,
          std::to_string(transitive) + " transitive spaces, " +
              std::to_string(exchanges) + " exchanges, " +
              std::to_string(failures) + " failures, " + std::to_string(t) +
              " s (limit 60 s)"};
}

// 4. Closure is idempotent on every transitive space, |S| <= 8.
Outcome ClosureIdempotence() {
  auto corpus = Corpus(400, 8, 1000);
  for (auto& s : Named()) corpus.push_back(std::move(s));
  corpus.push_back(CliqueUnionSpace({3, 3, 2}));
  std::size_t transitive = 0;
  std::size_t mismatches = 0;
  for (const auto& s : corpus) {
    if (!CheckTransitivity(s, CheckMode::Exhaustive()).passed()) continue;
    ++transitive;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) {
      const auto set = ElementSet::FromMask(m);
      if (Closure(s, set) != IteratedClosure(s, set)) ++mismatches;
    }
  }
  return {mismatches == 0 && transitive > 0,
          std::to_string(transitive) + " transitive spaces, " +
              std::to_string(mismatches) + " mismatches"};
}

// Restricted growth strings: every set partition of {0..n-1}.
void ForEachPartition(std::size_t n,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == n) {
      fn(block);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

// 5. Disjoint unions of cliques pass; the 3-vertex path fails with a witness
// that re-validates.
Outcome GraphInterrogation() {
  std::size_t graphs = 0;
  std::size_t failures = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    ForEachPartition(n, [&](const std::vector<std::size_t>& block) {
      GraphSpec g;
      for (std::size_t v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (block[u] == block[v]) g.edges.emplace_back(g.vertices[u], g.vertices[v]);
        }
      }
      ++graphs;
      if (!CheckTransitivity(GraphSpace(g), CheckMode::Exhaustive()).passed()) {
        ++failures;
      }
    });
  }
  const auto p = GraphSpace({{"x", "a", "b"}, {{"x", "a"}, {"a", "b"}}});
  const auto report = CheckTransitivity(p, CheckMode::Exhaustive());
  bool path_ok = report.verdict == Verdict::kFail && !report.witnesses.empty();
  if (path_ok) {
    const auto& w = report.witnesses.front();
    path_ok = w.x == p.Id("x") && w.a == p.SetOf({"a"}) && w.b == p.SetOf({"b"}) &&
              DependsOn(p, *w.x, w.a).has_value() &&
              DependsOn(p, p.Id("a"), *w.b).has_value() &&
              !DependsOn(p, *w.x, *w.b).has_value();
    for (const auto& each : report.witnesses) {
      path_ok = path_ok && ValidateWitness(p, AxiomName::kTransitivity, each);
    }
  }
  return {failures == 0 && path_ok,
          std::to_string(graphs) + " clique unions, " +
              std::to_string(failures) + " failures; path witness " +
              (path_ok ? "valid" : "INVALID")};
}

// 6. Plane vectors: bases are exactly the non-parallel pairs. The oracle
// works from the coordinates, not from the generated delta.
Outcome VectorBases() {
  const std::vector<Vector2> vs{{1, 0}, {2, 0}, {0, 1}, {1, 1}};
  const auto space = ParallelVectorSpace(vs, false);
  const std::size_t n = vs.size();
  const auto parallel = [&](std::size_t i, std::size_t j) {
    return vs[i].x * vs[j].y - vs[i].y * vs[j].x == 0;
  };
  const auto independent = [&](std::uint64_t m) {
    if (__builtin_popcountll(m) > 2) return false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((m >> i & 1) && (m >> j & 1) && parallel(i, j)) return false;
      }
    }
    return true;
  };
  const auto spans = [&](std::uint64_t m, std::size_t v) {
    if (m >> v & 1) return true;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i & 1) && parallel(i, v)) return true;
    }
    // Any two other vectors make a 3-element dependent set with v.
    return __builtin_popcountll(m & ~(std::uint64_t{1} << v)) >= 2;
  };
  std::vector<std::uint64_t> expected;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (!independent(m)) continue;
    bool basis = true;
    for (std::size_t v = 0; v < n; ++v) basis = basis && spans(m, v);
    if (basis) expected.push_back(m);
  }
  testing::SortGraded(expected);
  const auto actual = testing::ToMasks(EnumerateBases(space).sets);
  bool ok = actual == expected && actual.size() == 5;
  for (std::uint64_t m : actual) {
    const int i = __builtin_ctzll(m);
    const int j = 63 - __builtin_clzll(m);
    ok = ok && __builtin_popcountll(m) == 2 && !parallel(i, j);
  }
  return {ok, std::to_string(actual.size()) + " bases, oracle " +
                  std::to_string(expected.size())};
}

std::pair<int, std::string> RunBinary(const std::string& command) {
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
    output.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// 7. Porcelain output and exit codes are identical across two runs of the
// real binary.
Outcome Determinism() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("depspace_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::string& name, const std::string& text) {
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
  };
  const std::string space1 = write("space1.txt", "elements a b c d\ndep a b c\n");
  const std::string p3 = write("p3.txt", "elements x a b\ndep x a\ndep a b\n");
  const std::string big =
      write("big.txt", FormatSpaceFile(RandomSpace(16, 12, 4, 77)));
  const std::string bin = DEPSPACE_CLI_PATH;
  const std::vector<std::string> commands{
      "check " + space1 + " --mode exhaustive",
      "check " + p3 + " --mode exhaustive",
      "check " + p3 + " --mode sampled --samples 2000 --seed 11",
      "check " + big + " --mode sampled --samples 5000 --seed 3",
      "closure " + space1 + " --set b,c",
      "iterated-closure " + p3 + " --set b",
      "independent " + space1 + " --set a,b,c,d",
      "basis " + big,
      "bases " + space1,
      "exchange " + space1 + " --basis a,b,d --independent c",
      "exchange " + p3 + " --basis a --independent x",
      "gen random --elements 9 --circuits 6 --max-size 4 --seed 5",
      "gen random --elements 16 --circuits 40 --max-size 3 --seed 123",
      "gen graph --vertices x,a,b --edge x a --edge a b",
      "gen vectors --vectors=1:0,2:0,0:1,1:1,-3:2",
      "gen repetition --alphabet 3 --length 2",
  };
  std::size_t mismatches = 0;
  std::size_t bad_exit = 0;
  for (const auto& args : commands) {
    const std::string full = bin + " --porcelain " + args + " 2>&1";
    const auto first = RunBinary(full);
    const auto second = RunBinary(full);
    if (first != second) ++mismatches;
    if (first.first < 0 || first.first > 1) ++bad_exit;
  }
  std::filesystem::remove_all(dir);
  return {mismatches == 0 && bad_exit == 0,
          std::to_string(commands.size()) + " invocations twice, " +
              std::to_string(mismatches) + " mismatches, " +
              std::to_string(bad_exit) + " unexpected exits"};
}

// 8. gen -> parse -> emit is a byte-level fixpoint for 50 generated spaces.
Outcome RoundTrip() {
  std::vector<std::vector<std::string>> gens;
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 15;
    gens.push_back({"gen", "random", "--elements", std::to_string(n),
                    "--circuits", std::to_string(i % (n + 1)), "--max-size",
                    std::to_string(2 + i % 4), "--seed", std::to_string(i)});
  }
  for (int length = 1; length <= 3; ++length) {
    gens.push_back({"gen", "repetition", "--alphabet", "3", "--length",
                    std::to_string(length)});
  }
  gens.push_back({"gen", "vectors", "--vectors=1:0,2:0,0:1,1:1"});
  gens.push_back({"gen", "vectors", "--vectors=0:0,1:0,5:-5", "--allow-zero"});
  gens.push_back({"gen", "graph", "--vertices", "1,2,3,4", "--edge", "1", "2",
                  "--edge", "3", "4"});
  gens.push_back({"gen", "graph", "--vertices", "x,a,b", "--edge", "a", "b",
                  "--edge", "x", "a"});
  gens.push_back({"gen", "graph", "--vertices", "p,q,r"});
  gens.push_back({"gen", "repetition", "--alphabet", "12", "--length", "2"});
  gens.push_back({"gen", "random", "--elements", "16", "--circuits", "200",
                  "--max-size", "5", "--seed", "99"});
  std::size_t failures = 0;
  for (const auto& args : gens) {
    std::ostringstream out, err;
    if (cli::RunCommand(args, out, err) != cli::kExitOk) {
      ++failures;
      continue;
    }
    const std::string text = out.str();
    if (FormatSpaceFile(ParseSpaceFile(text)) != text) ++failures;
  }
  return {failures == 0 && gens.size() == 50,
          std::to_string(gens.size()) + " spaces, " +
              std::to_string(failures) + " failures"};
}

}  // namespace
}  // namespace depspace

int main() {
  using depspace::Outcome;
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"AC1 hereditary/superset suite", depspace::HereditarySuperset},
      {"AC2 maximality equivalence", depspace::MaximalityEquivalence},
      {"AC3 exchange on transitive spaces", depspace::ExchangeCertificates},
      {"AC4 transitivity => closure idempotence", depspace::ClosureIdempotence},
      {"AC5 graph spaces: cliques pass, path fails", depspace::GraphInterrogation},
      {"AC6 plane vector bases", depspace::VectorBases},
      {"AC7 porcelain determinism", depspace::Determinism},
      {"AC8 gen/parse/emit round trip", depspace::RoundTrip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": "
              << outcome.detail << std::endl;
    failed += !outcome.pass;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed"
                            : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
