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


// Generators and independent oracles shared by the property tests and the
// acceptance runner. Oracles here use only the public data types, never the
// engine's indexes or evaluators.

#ifndef MSOKG_TESTS_SUPPORT_TEST_SUPPORT_H_
#define MSOKG_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "msokg/dataset.h"
#include "msokg/schema.h"
#include "msokg/store.h"
#include "msokg/term.h"

namespace msokg::testing {

std::string SourcePath(const std::string& relative);
std::string SchemaFile();
std::string SeedFile();

// Schema file + seed file through the full load pipeline.
LoadedDataset LoadSeed();
std::vector<Triple> SeedAsserted();

// A fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& path() const { return path_; }
  // Writes `content` to `name` inside the directory; returns the full path.
  std::string Write(const std::string& name, const std::string& content) const;
  std::string File(const std::string& name) const;
  // Regular files currently in the directory, by name.
  std::vector<std::string> Files() const;

 private:
  std::string path_;
};

// Hand-counted from seed/xrct.ttl: 10 entities with type and label, 10
// relation triples, 2 formulaLatex and 1 externalId literal.
inline constexpr std::size_t kSeedAssertedCount = 33;
inline constexpr std::size_t kSeedRelationCount = 10;

inline constexpr char kEx[] = "https://example.org/mardi/xrct#";
std::string Ex(const std::string& local);
std::string Mso(const std::string& local);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t Below(std::size_t n);
  std::size_t Between(std::size_t lo, std::size_t hi);  // inclusive
  bool Chance(double p);
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[Below(v.size())];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Literal lexical forms mixing escapes and non-ASCII text.
Term RandomLiteral(Rng& rng);

// Triples over `entities` subjects/objects and `predicates` predicates in
// http://ex.org/; objects are literals with probability `literal_p`.
Triple RandomTriple(Rng& rng, std::size_t entities, std::size_t predicates,
                    double literal_p = 0.25);

// Prefix map used by random round-trip graphs.
PrefixMap RoundTripPrefixes();

// Up to `max_triples` triples whose IRIs fall under the round-trip prefixes,
// under no prefix at all, or under a prefix with a local name that cannot be
// written as a CURIE.
std::vector<Triple> RandomRoundTripGraph(Rng& rng, std::size_t max_triples);

// Object-property triples between `entities` nodes, biased toward transitive
// properties so closures get long, plus a few annotation triples.
std::vector<Triple> RandomSchemaGraph(Rng& rng, const Schema& schema,
                                      std::size_t entities,
                                      std::size_t triples);

// Applies every inverse and transitive rule to the whole set until nothing
// changes.
std::set<Triple> NaiveClosure(const std::vector<Triple>& asserted,
                              const Schema& schema);

// A BGP kept both as structured data and as query text.
struct OraclePosition {
  std::optional<std::string> variable;
  Term constant;
};
struct OraclePattern {
  OraclePosition s, p, o;
};
struct OracleQuery {
  std::vector<OraclePattern> patterns;
  std::vector<std::string> projection;  // empty means every variable
  // Optional CONTAINS(?v, "needle") filter.
  std::optional<std::pair<std::string, std::string>> contains;
  std::string text;
};

OracleQuery RandomQuery(Rng& rng, const std::vector<Triple>& graph,
                        std::size_t entities, std::size_t predicates);

// Enumerates every assignment of the query's variables over all terms in
// `graph` and keeps the ones satisfying every pattern and the filter.
// Rows are projected and deduplicated.
std::set<std::vector<Term>> BruteForceQuery(const OracleQuery& q,
                                            const std::vector<Triple>& graph,
                                            std::vector<std::string>* vars);

// Every maximal canonical path from `start` by exhaustive path enumeration.
// Paths are lists of entity IRIs.
std::set<std::vector<std::string>> OracleChains(
    const std::set<Triple>& graph, const std::string& ns,
    const std::string& start);

// Random typed graph for chain tests: up to `entities` nodes, each typed with
// one or two chain classes, connected by canonical chain edges.
std::vector<Triple> RandomChainGraph(Rng& rng, const std::string& ns,
                                     std::size_t entities);

// Retargets the object of one seed relation triple to an entity whose types
// exclude the property's range. Returns the mutated triple list and the
// mutated triple.
std::pair<std::vector<Triple>, Triple> MutateSeedEdge(
    Rng& rng, const std::vector<Triple>& seed, const Schema& schema);

}  // namespace msokg::testing

#endif  // MSOKG_TESTS_SUPPORT_TEST_SUPPORT_H_
