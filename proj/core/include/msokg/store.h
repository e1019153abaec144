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

#ifndef MSOKG_STORE_H_
#define MSOKG_STORE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msokg/term.h"

namespace msokg {

// Access path of a sorted triple index.
enum class IndexOrder { kSpo, kPos, kOsp };

// A triple pattern; unset positions match anything.
struct TriplePattern {
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;
};

class GraphSnapshot;

// Mutable, single-writer triple set with SPO, POS and OSP indexes.
class TripleStore {
 public:
  TripleStore() = default;
  TripleStore(const TripleStore&) = delete;
  TripleStore& operator=(const TripleStore&) = delete;
  TripleStore(TripleStore&&) = default;
  TripleStore& operator=(TripleStore&&) = default;

  // Returns true iff the triple was not present. Throws StructuralError on a
  // malformed triple.
  bool Insert(const Triple& t);
  bool Contains(const Triple& t) const { return spo_.contains(t); }
  std::size_t size() const { return spo_.size(); }

  // Enumerates the store through one of its indexes.
  std::vector<Triple> Enumerate(IndexOrder order) const;

  // Freezes the current contents into an immutable snapshot.
  GraphSnapshot Snapshot(PrefixMap prefixes) const;

 private:
  struct PosLess {
    bool operator()(const Triple* a, const Triple* b) const;
  };
  struct OspLess {
    bool operator()(const Triple* a, const Triple* b) const;
  };

  std::set<Triple> spo_;
  // Node addresses in spo_ are stable, so the secondary indexes point there.
  std::set<const Triple*, PosLess> pos_;
  std::set<const Triple*, OspLess> osp_;
};

// Immutable, fully indexed triple set. Safe for concurrent readers.
class GraphSnapshot {
 public:
  GraphSnapshot() = default;
  // Sorts and deduplicates `triples`; throws StructuralError on a malformed
  // triple.
  GraphSnapshot(std::vector<Triple> triples, PrefixMap prefixes);

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }

  // All triples in (s,p,o) order.
  std::span<const Triple> triples() const { return spo_; }
  const PrefixMap& prefixes() const { return prefixes_; }

  bool Contains(const Triple& t) const;

  // Triples matching every bound position of `pattern`, in (s,p,o) order.
  std::vector<Triple> Match(const TriplePattern& pattern) const;
  // Number of matches without materializing them.
  std::size_t Count(const TriplePattern& pattern) const;

  // Enumerates the snapshot through one of its indexes.
  std::vector<Triple> Enumerate(IndexOrder order) const;

  // Objects of (subject, predicate, *) and subjects of (*, predicate, object).
  std::vector<Term> Objects(const Term& subject, const Term& predicate) const;
  std::vector<Term> Subjects(const Term& predicate, const Term& object) const;

  // Every distinct IRI occurring in subject position, sorted.
  std::vector<std::string> SubjectIris() const;
  // True iff the IRI occurs in any position.
  bool Mentions(std::string_view iri) const;

 private:
  // The [first, last) positions of `pattern` matches in the index whose key
  // prefix covers every bound position.
  struct Range {
    IndexOrder order;
    std::size_t first;
    std::size_t last;
  };
  Range Lookup(const TriplePattern& pattern) const;
  const Triple& At(IndexOrder order, std::size_t i) const;

  std::vector<Triple> spo_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> osp_;
  PrefixMap prefixes_;
};

bool Matches(const TriplePattern& pattern, const Triple& t);

// Free-function forms of the store operations.
bool InsertTriple(TripleStore& store, const Triple& t);
std::vector<Triple> MatchPattern(const GraphSnapshot& snapshot,
                                 const TriplePattern& pattern);

// Everything the graph says about one IRI.
struct EntityRecord {
  std::string iri;
  std::set<std::string> types;
  std::optional<std::string> label;
  std::optional<std::string> description;
  // (predicate IRI, literal) for every literal-valued triple of the entity,
  // including the label and description triples.
  std::vector<std::pair<std::string, Term>> literal_attributes;
  // (predicate IRI, object IRI), excluding rdf:type.
  std::vector<std::pair<std::string, std::string>> outgoing;
  // (predicate IRI, subject IRI), including rdf:type when the IRI is a class.
  std::vector<std::pair<std::string, std::string>> incoming;

  bool empty() const {
    return types.empty() && literal_attributes.empty() && outgoing.empty() &&
           incoming.empty();
  }
};

EntityRecord GetEntityRecord(const GraphSnapshot& snapshot,
                             std::string_view iri);

}  // namespace msokg

#endif  // MSOKG_STORE_H_
