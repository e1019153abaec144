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

// Guided walks over a materialized snapshot: the modeling-simulation-
// optimization chain
//
//   ApplicationDomain -containsProblem-> ApplicationProblem
//     -modeledBy-> MathematicalModel -usesAlgorithmicProblem->
//     AlgorithmicProblem -solvedBy-> Algorithm -implementedBy-> Software
//
// plus single-edge competency questions and neighbor grouping.

#ifndef MSOKG_TRAVERSAL_H_
#define MSOKG_TRAVERSAL_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msokg/schema.h"
#include "msokg/store.h"

namespace msokg {

struct ChainStep {
  std::string entity;
  std::string class_iri;

  bool operator==(const ChainStep&) const = default;
  auto operator<=>(const ChainStep&) const = default;
};

struct Chain {
  std::vector<ChainStep> steps;
  // edges[i] connects steps[i] and steps[i + 1].
  std::vector<std::string> edges;
  // True iff the chain reaches a Software entity.
  bool complete = false;

  bool operator==(const Chain&) const = default;
};

// Canonical class sequence and connecting properties under `ns`.
struct ChainVocabulary {
  std::vector<std::string> classes;  // 6 entries
  std::vector<std::string> edges;    // 5 entries

  explicit ChainVocabulary(std::string_view ns);
};

class NotAChainClass : public std::invalid_argument {
 public:
  explicit NotAChainClass(std::string_view iri);
};

// All maximal paths along the canonical sequence that begin at `start`,
// sorted by step IRIs. Each next entity must carry the next class; no entity
// repeats within a path. Throws NotAChainClass if `start` has no chain class.
std::vector<Chain> MsoChains(const GraphSnapshot& snapshot,
                             const Schema& schema, std::string_view start);

// "A -[p]-> B -[q]-> C" with CURIEs.
std::string FormatChain(const Chain& chain, const PrefixMap& prefixes);

enum class CompetencyKind {
  kModelsForProblem,
  kAlgorithmicProblemsForModel,
  kAlgorithmsForProblem,
  kSoftwareForAlgorithm,
  kPublicationsForAlgorithm,
  kBenchmarksForAlgorithm,
};

std::string_view ToString(CompetencyKind kind);
std::optional<CompetencyKind> ParseCompetencyKind(std::string_view name);

// Sorted, distinct entities reached over the kind's defining edge. Unknown
// targets give an empty list.
std::vector<std::string> Competency(const GraphSnapshot& snapshot,
                                    CompetencyKind kind,
                                    std::string_view target,
                                    std::string_view ns = vocab::kMso);

enum class Direction { kOutgoing, kIncoming, kBoth };

std::optional<Direction> ParseDirection(std::string_view name);

// Property IRI -> sorted distinct endpoint IRIs. Literal-valued and rdf:type
// triples are excluded.
std::map<std::string, std::vector<std::string>> Neighbors(
    const GraphSnapshot& snapshot, std::string_view iri, Direction direction);

}  // namespace msokg

#endif  // MSOKG_TRAVERSAL_H_
