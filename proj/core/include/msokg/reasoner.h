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

// Forward-chaining materialization of the two rules the ontology implies:
//
//   InverseRule:    (s p o)           => (o q s)   when q = inverseOf(p)
//   TransitiveRule: (a p b), (b p c)  => (a p c)   when p is transitive
//
// Evaluation is semi-naive: each round only joins triples derived in the
// previous round against the full set.

#ifndef MSOKG_REASONER_H_
#define MSOKG_REASONER_H_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msokg/schema.h"
#include "msokg/store.h"

namespace msokg {

enum class Rule { kInverse, kTransitive };

std::string_view ToString(Rule rule);

struct InferenceStats {
  std::size_t asserted_count = 0;
  std::size_t inferred_count = 0;
  // Rounds executed, including the final round that derived nothing.
  int iterations = 0;
  std::map<std::string, std::size_t> rule_counts;

  bool operator==(const InferenceStats&) const = default;
};

enum class ProvenanceStatus { kAsserted, kInferred };

struct TripleProvenance {
  ProvenanceStatus status = ProvenanceStatus::kAsserted;
  std::optional<Rule> rule;
  // Empty iff asserted; one premise for InverseRule, two for TransitiveRule.
  std::vector<Triple> premises;
};

class NotInGraph : public std::out_of_range {
 public:
  explicit NotInGraph(const Triple& t);
};

// A materialized snapshot plus the first derivation of every inferred triple.
class MaterializedGraph {
 public:
  MaterializedGraph() = default;
  MaterializedGraph(GraphSnapshot snapshot, InferenceStats stats,
                    std::map<Triple, TripleProvenance> derivations);

  const GraphSnapshot& snapshot() const { return snapshot_; }
  const InferenceStats& stats() const { return stats_; }

  bool IsInferred(const Triple& t) const { return derivations_.contains(t); }

  // Throws NotInGraph if `t` is absent.
  TripleProvenance Explain(const Triple& t) const;

 private:
  GraphSnapshot snapshot_;
  InferenceStats stats_;
  std::map<Triple, TripleProvenance> derivations_;
};

// Least fixpoint of InverseRule and TransitiveRule over the schema's object
// properties. Annotation, datatype and unknown-predicate triples pass through.
MaterializedGraph Materialize(std::span<const Triple> asserted,
                              const Schema& schema, PrefixMap prefixes = {});

TripleProvenance Explain(const MaterializedGraph& graph, const Triple& t);

}  // namespace msokg

#endif  // MSOKG_REASONER_H_
