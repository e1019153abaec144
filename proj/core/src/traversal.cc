// Copyright 2026 The msokg Authors.
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

#include "msokg/traversal.h"

#include <algorithm>
#include <array>
#include <set>

namespace msokg {

ChainVocabulary::ChainVocabulary(std::string_view ns) {
  std::string prefix(ns);
  for (const char* c : {"ApplicationDomain", "ApplicationProblem",
                        "MathematicalModel", "AlgorithmicProblem", "Algorithm",
                        "Software"}) {
    classes.push_back(prefix + c);
  }
  for (const char* e : {"containsProblem", "modeledBy",
                        "usesAlgorithmicProblem", "solvedBy",
                        "implementedBy"}) {
    edges.push_back(prefix + e);
  }
}

NotAChainClass::NotAChainClass(std::string_view iri)
    : std::invalid_argument("<" + std::string(iri) +
                            "> is not typed with a chain class") {}

namespace {

class ChainWalker {
 public:
  ChainWalker(const GraphSnapshot& snapshot, const ChainVocabulary& vocab)
      : snapshot_(snapshot), vocab_(vocab) {}

  bool HasClass(const std::string& iri, std::size_t stage) const {
    return snapshot_.Contains(MakeTriple(iri, vocab::kRdfType,
                                         vocab_.classes[stage]));
  }

  void Walk(Chain& path, std::size_t stage, std::vector<Chain>& out) {
    std::vector<std::string> next;
    if (stage + 1 < vocab_.classes.size()) {
      const std::string& here = path.steps.back().entity;
      for (const Term& o : snapshot_.Objects(Term::Iri(here),
                                             Term::Iri(vocab_.edges[stage]))) {
        if (!o.is_iri() || !HasClass(o.value, stage + 1)) continue;
        bool seen = std::any_of(
            path.steps.begin(), path.steps.end(),
            [&](const ChainStep& s) { return s.entity == o.value; });
        if (!seen) next.push_back(o.value);
      }
    }
    if (next.empty()) {
      Chain done = path;
      done.complete = done.steps.back().class_iri == vocab_.classes.back();
      out.push_back(std::move(done));
      return;
    }
    for (const std::string& n : next) {
      path.steps.push_back({n, vocab_.classes[stage + 1]});
      path.edges.push_back(vocab_.edges[stage]);
      Walk(path, stage + 1, out);
      path.steps.pop_back();
      path.edges.pop_back();
    }
  }

 private:
  const GraphSnapshot& snapshot_;
  const ChainVocabulary& vocab_;
};

}  // namespace

std::vector<Chain> MsoChains(const GraphSnapshot& snapshot,
                             const Schema& schema, std::string_view start) {
  ChainVocabulary vocab(schema.ns);
  ChainWalker walker(snapshot, vocab);
  std::string begin(start);
  std::optional<std::size_t> stage;
  for (std::size_t i = 0; i < vocab.classes.size(); ++i) {
    if (walker.HasClass(begin, i)) {
      stage = i;
      break;
    }
  }
  if (!stage) throw NotAChainClass(start);

  std::vector<Chain> out;
  Chain path;
  path.steps.push_back({begin, vocab.classes[*stage]});
  walker.Walk(path, *stage, out);
  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    return a.steps < b.steps;
  });
  return out;
}

std::string FormatChain(const Chain& chain, const PrefixMap& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    if (i > 0) out += " -[" + DisplayIri(chain.edges[i - 1], prefixes) + "]-> ";
    out += DisplayIri(chain.steps[i].entity, prefixes);
  }
  return out;
}

namespace {

constexpr std::array<std::pair<CompetencyKind, std::string_view>, 6>
    kCompetencyNames = {{
        {CompetencyKind::kModelsForProblem, "ModelsForProblem"},
        {CompetencyKind::kAlgorithmicProblemsForModel,
         "AlgorithmicProblemsForModel"},
        {CompetencyKind::kAlgorithmsForProblem, "AlgorithmsForProblem"},
        {CompetencyKind::kSoftwareForAlgorithm, "SoftwareForAlgorithm"},
        {CompetencyKind::kPublicationsForAlgorithm, "PublicationsForAlgorithm"},
        {CompetencyKind::kBenchmarksForAlgorithm, "BenchmarksForAlgorithm"},
    }};

}  // namespace

std::string_view ToString(CompetencyKind kind) {
  for (const auto& [k, name] : kCompetencyNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

std::optional<CompetencyKind> ParseCompetencyKind(std::string_view name) {
  for (const auto& [k, n] : kCompetencyNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> Competency(const GraphSnapshot& snapshot,
                                    CompetencyKind kind,
                                    std::string_view target,
                                    std::string_view ns) {
  std::string prefix(ns);
  Term node = Term::Iri(std::string(target));
  std::set<std::string> found;
  auto incoming = [&](std::string_view local) {
    for (const Term& s : snapshot.Subjects(Term::Iri(prefix + std::string(local)),
                                           node)) {
      found.insert(s.value);
    }
  };
  switch (kind) {
    case CompetencyKind::kModelsForProblem:
      incoming("models");
      break;
    case CompetencyKind::kAlgorithmicProblemsForModel:
      for (const Term& o : snapshot.Objects(
               node, Term::Iri(prefix + "usesAlgorithmicProblem"))) {
        if (o.is_iri()) found.insert(o.value);
      }
      break;
    case CompetencyKind::kAlgorithmsForProblem:
      incoming("solves");
      break;
    case CompetencyKind::kSoftwareForAlgorithm:
      incoming("implements");
      break;
    case CompetencyKind::kPublicationsForAlgorithm:
      incoming("invents");
      incoming("studies");
      incoming("analyzes");
      break;
    case CompetencyKind::kBenchmarksForAlgorithm:
      incoming("tests");
      break;
  }
  return {found.begin(), found.end()};
}

std::optional<Direction> ParseDirection(std::string_view name) {
  if (name == "outgoing") return Direction::kOutgoing;
  if (name == "incoming") return Direction::kIncoming;
  if (name == "both") return Direction::kBoth;
  return std::nullopt;
}

std::map<std::string, std::vector<std::string>> Neighbors(
    const GraphSnapshot& snapshot, std::string_view iri, Direction direction) {
  std::map<std::string, std::set<std::string>> grouped;
  Term node = Term::Iri(std::string(iri));
  if (direction != Direction::kIncoming) {
    for (const Triple& t : snapshot.Match({node, std::nullopt, std::nullopt})) {
      if (t.object.is_literal() || t.predicate.value == vocab::kRdfType) {
        continue;
      }
      grouped[t.predicate.value].insert(t.object.value);
    }
  }
  if (direction != Direction::kOutgoing) {
    for (const Triple& t : snapshot.Match({std::nullopt, std::nullopt, node})) {
      if (t.predicate.value == vocab::kRdfType) continue;
      grouped[t.predicate.value].insert(t.subject.value);
    }
  }
  std::map<std::string, std::vector<std::string>> out;
  for (auto& [p, ends] : grouped) out.emplace(p, std::vector(ends.begin(), ends.end()));
  return out;
}

}  // namespace msokg
