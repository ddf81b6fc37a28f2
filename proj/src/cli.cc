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

#include "depspace/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "depspace/axioms.h"
#include "depspace/bases.h"
#include "depspace/error.h"
#include "depspace/exchange.h"
#include "depspace/instances.h"
#include "depspace/relations.h"
#include "depspace/space.h"
#include "depspace/space_file.h"

namespace depspace::cli {
namespace {

class Printer {
 public:
  Printer(std::ostream& out, bool porcelain) : out_(out), porcelain_(porcelain) {}

  bool porcelain() const { return porcelain_; }

  // Porcelain-only record.
  void Record(std::string_view key, std::string_view value) {
    if (porcelain_) out_ << key << '\t' << value << '\n';
  }
  // Human-only line.
  void Line(std::string_view text) {
    if (!porcelain_) out_ << text << '\n';
  }

  std::string Set(const DependenceSpace& space, const ElementSet& set) const {
    std::string joined;
    for (const std::string& name : NamesOf(space, set)) {
      if (!joined.empty()) joined += ',';
      joined += name;
    }
    if (porcelain_) return joined;
    return "{" + joined + "}";
  }

 private:
  std::ostream& out_;
  bool porcelain_;
};

DependenceSpace LoadSpace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseSpaceFile(text.str());
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ElementSet ParseSet(const DependenceSpace& space, const std::string& list) {
  return space.SetOf(SplitList(list));
}

Vector2 ParseVector(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_x = 0;
    std::size_t used_y = 0;
    const std::string xs = text.substr(0, colon);
    const std::string ys = text.substr(colon + 1);
    Vector2 v{std::stoll(xs, &used_x), std::stoll(ys, &used_y)};
    if (used_x != xs.size() || used_y != ys.size()) {
      throw std::invalid_argument(text);
    }
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector '" + text + "' is not of the form x:y");
  }
}

std::string WitnessText(const Printer& p, const DependenceSpace& space,
                        const CounterexampleWitness& w) {
  std::string text;
  if (w.x) text += space.Name(*w.x) + " | ";
  text += "A=" + p.Set(space, w.a);
  if (w.b) text += " | B=" + p.Set(space, *w.b);
  return text;
}

int RunCheck(Printer& p, const std::string& file, const std::string& mode,
             std::uint64_t samples, std::uint64_t seed) {
  const DependenceSpace space = LoadSpace(file);
  p.Record("ELEMENTS", std::to_string(space.size()));
  p.Record("CIRCUITS", std::to_string(space.delta().size()));
  p.Record("MINSIZE", std::to_string(space.min_circuit_size()));
  p.Line("Space: " + std::to_string(space.size()) + " elements, " +
         std::to_string(space.delta().size()) +
         " directly dependent set(s), minimum circuit size " +
         std::to_string(space.min_circuit_size()));

  const CheckMode check_mode = mode == "sampled"
                                   ? CheckMode::Sampled(samples, seed)
                                   : CheckMode::Exhaustive();
  const AxiomReport report = CheckTransitivity(space, check_mode);
  const std::string verdict = report.passed() ? "PASS" : "FAIL";
  p.Record("AXIOM", AxiomLabel(report.axiom));
  p.Record("MODE", mode);
  if (check_mode.kind == CheckMode::Kind::kSampled) {
    p.Record("SAMPLES", std::to_string(samples));
    p.Record("SEED", std::to_string(seed));
  }
  p.Record("EXAMINED", std::to_string(report.examined));
  p.Record("VERDICT", verdict);
  std::string suffix = "(" + mode;
  if (check_mode.kind == CheckMode::Kind::kSampled) {
    suffix += ", " + std::to_string(samples) + " samples, seed " +
              std::to_string(seed);
  }
  p.Line(std::string(AxiomLabel(report.axiom)) + ": " + verdict + " " +
         suffix + ")");
  for (const auto& w : report.witnesses) {
    p.Record("WITNESS", WitnessText(p, space, w));
    p.Line("WITNESS " + WitnessText(p, space, w));
  }
  return report.passed() ? kExitOk : kExitViolated;
}

int RunClosure(Printer& p, const std::string& file, const std::string& set,
               bool iterated) {
  const DependenceSpace space = LoadSpace(file);
  const ElementSet a = ParseSet(space, set);
  const ElementSet result =
      iterated ? IteratedClosure(space, a) : Closure(space, a);
  p.Record("SET", p.Set(space, a));
  p.Record(iterated ? "ITERATED_CLOSURE" : "CLOSURE", p.Set(space, result));
  p.Line(std::string(iterated ? "iterated-closure(" : "closure(") +
         p.Set(space, a) + ") = " + p.Set(space, result));
  return kExitOk;
}

int RunIndependent(Printer& p, const std::string& file,
                   const std::string& set) {
  const DependenceSpace space = LoadSpace(file);
  const ElementSet a = ParseSet(space, set);
  const auto witness = IsDependent(space, a);
  p.Record("SET", p.Set(space, a));
  p.Record("INDEPENDENT", witness ? "false" : "true");
  if (!witness) {
    p.Line(p.Set(space, a) + " is independent");
    return kExitOk;
  }
  p.Record("WITNESS", p.Set(space, *witness->circuit));
  p.Line(p.Set(space, a) + " is dependent: contains " +
         p.Set(space, *witness->circuit));
  return kExitViolated;
}

int RunBasis(Printer& p, const std::string& file) {
  const DependenceSpace space = LoadSpace(file);
  const ElementSet basis = FindBasis(space);
  p.Record("BASIS", p.Set(space, basis));
  p.Line("basis: " + p.Set(space, basis));
  return kExitOk;
}

int RunBases(Printer& p, const std::string& file) {
  const DependenceSpace space = LoadSpace(file);
  const IndependentFamily bases = EnumerateBases(space);
  for (const ElementSet& b : bases.sets) {
    p.Record("BASIS", p.Set(space, b));
    p.Line(p.Set(space, b));
  }
  p.Record("COUNT", std::to_string(bases.sets.size()));
  p.Line(std::to_string(bases.sets.size()) + " bases");
  return kExitOk;
}

int RunExchange(Printer& p, const std::string& file, const std::string& basis,
                const std::string& independent) {
  const DependenceSpace space = LoadSpace(file);
  const ExchangeCertificate cert = SteinitzExchange(
      space, ParseSet(space, basis), ParseSet(space, independent));
  const bool verified = VerifyExchange(space, cert);
  p.Record("A", p.Set(space, cert.basis));
  p.Record("B", p.Set(space, cert.independent));
  p.Record("A_PRIME", p.Set(space, cert.removed));
  p.Record("X", p.Set(space, cert.result));
  p.Record("VERIFIED", verified ? "true" : "false");
  p.Line("A  = " + p.Set(space, cert.basis));
  p.Line("B  = " + p.Set(space, cert.independent));
  p.Line("A' = " + p.Set(space, cert.removed));
  p.Line("X  = B + (A - A') = " + p.Set(space, cert.result));
  p.Line(verified ? "X is a basis" : "X is NOT a basis");
  return verified ? kExitOk : kExitViolated;
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Dependence spaces: closure, bases, exchange and axiom checks",
               "depspace"};
  app.require_subcommand(1);
  app.fallthrough();
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain,
               "Stable KEY<TAB>VALUE output for scripts");

  std::string file;
  std::string set;
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::string basis;
  std::string independent;

  auto* check = app.add_subcommand("check", "Check the transitivity axiom");
  check->add_option("file", file, "Space file")->required();
  check->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  check->add_option("--samples", samples, "Sampled triples");
  check->add_option("--seed", seed, "Sampling seed");

  auto* closure = app.add_subcommand("closure", "One-step closure of a set");
  auto* iterated =
      app.add_subcommand("iterated-closure", "Closure iterated to a fixpoint");
  auto* indep = app.add_subcommand("independent", "Test a set for dependence");
  for (auto* sub : {closure, iterated, indep}) {
    sub->add_option("file", file, "Space file")->required();
    sub->add_option("--set", set, "Comma-separated element names")
        ->required();
  }

  auto* basis_cmd = app.add_subcommand("basis", "Greedy basis");
  basis_cmd->add_option("file", file, "Space file")->required();
  auto* bases_cmd = app.add_subcommand("bases", "Enumerate all bases");
  bases_cmd->add_option("file", file, "Space file")->required();

  auto* exchange = app.add_subcommand("exchange", "Exchange B into basis A");
  exchange->add_option("file", file, "Space file")->required();
  exchange->add_option("--basis", basis, "Basis A")->required();
  exchange->add_option("--independent", independent, "Independent set B")
      ->required();

  auto* gen = app.add_subcommand("gen", "Emit a generated space file");
  gen->require_subcommand(1);
  std::string vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  auto* gen_graph = gen->add_subcommand("graph", "Vertices and edges");
  gen_graph->add_option("--vertices", vertices, "Comma-separated vertices")
      ->required();
  gen_graph->add_option("--edge", edges, "Edge endpoints U V (repeatable)");
  std::string vectors;
  bool allow_zero = false;
  auto* gen_vectors = gen->add_subcommand("vectors", "Plane vectors");
  gen_vectors->add_option("--vectors", vectors, "Comma-separated x:y list")
      ->required();
  gen_vectors->add_flag("--allow-zero", allow_zero,
                        "Treat {0} as dependent (minimum circuit size 1)");
  std::uint64_t alphabet = 0;
  std::uint64_t length = 0;
  auto* gen_rep = gen->add_subcommand("repetition", "Words sharing a symbol");
  gen_rep->add_option("--alphabet", alphabet, "Alphabet size")->required();
  gen_rep->add_option("--length", length, "Word length")->required();
  std::size_t n = 0;
  std::size_t circuits = 0;
  std::size_t max_size = 3;
  std::uint64_t gen_seed = 0;
  auto* gen_random = gen->add_subcommand("random", "Seeded random space");
  gen_random->add_option("--elements", n, "Ground set size")->required();
  gen_random->add_option("--circuits", circuits, "Number of delta members")
      ->required();
  gen_random->add_option("--max-size", max_size, "Largest delta member");
  gen_random->add_option("--seed", gen_seed, "Generator seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Printer p(out, porcelain);
  try {
    if (*check) return RunCheck(p, file, mode, samples, seed);
    if (*closure) return RunClosure(p, file, set, false);
    if (*iterated) return RunClosure(p, file, set, true);
    if (*indep) return RunIndependent(p, file, set);
    if (*basis_cmd) return RunBasis(p, file);
    if (*bases_cmd) return RunBases(p, file);
    if (*exchange) return RunExchange(p, file, basis, independent);
    if (*gen_graph) {
      out << FormatSpaceFile(GraphSpace({SplitList(vertices), edges}));
    } else if (*gen_vectors) {
      std::vector<Vector2> vs;
      for (const std::string& item : SplitList(vectors)) {
        vs.push_back(ParseVector(item));
      }
      out << FormatSpaceFile(ParallelVectorSpace(vs, allow_zero));
    } else if (*gen_rep) {
      out << FormatSpaceFile(RepetitionSpace(alphabet, length));
    } else if (*gen_random) {
      out << FormatSpaceFile(RandomSpace(n, circuits, max_size, gen_seed));
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace depspace::cli
