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


#include <algorithm>

#include <gtest/gtest.h>

#include "msokg/query.h"
#include "test_support.h"

namespace msokg {
namespace {

using testing::Ex;
using testing::Mso;

QueryParseError QueryFailure(std::string_view text) {
  try {
    ParseQuery(text);
  } catch (const QueryParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a query parse error for: " << text;
  return QueryParseError(QueryErrorKind::kUnexpectedToken, 0, 0, "");
}

std::vector<std::vector<std::string>> Iris(const BindingTable& t) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (const Term& term : row) r.push_back(term.value);
    out.push_back(std::move(r));
  }
  return out;
}

class SeedQueryTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { seed_ = new LoadedDataset(testing::LoadSeed()); }
  static void TearDownTestSuite() { delete seed_; }
  static const GraphSnapshot& snap() { return seed_->graph.snapshot(); }
  static BindingTable Run(std::string_view q) { return Evaluate(ParseQuery(q), snap()); }

 private:
  static LoadedDataset* seed_;
};
LoadedDataset* SeedQueryTest::seed_ = nullptr;

TEST(ParseQueryTest, MinimalQuery) {
  QueryAst ast = ParseQuery("SELECT ?x WHERE { ?x a mmo:Algorithm }");
  ASSERT_EQ(ast.patterns.size(), 1u);
  EXPECT_EQ(ast.projection, std::vector<std::string>{"x"});
  EXPECT_EQ(ast.patterns[0].subject, QueryTerm(Variable{"x"}));
  EXPECT_EQ(ast.patterns[0].predicate,
            QueryTerm(Term::Iri(std::string(vocab::kRdfType))));
  EXPECT_EQ(ast.patterns[0].object, QueryTerm(PrefixedName{"mmo", "Algorithm"}));
  EXPECT_FALSE(ast.distinct);
}

TEST(ParseQueryTest, UnboundProjection) {
  QueryParseError e = QueryFailure("SELECT ?x WHERE { ?y a mmo:Algorithm }");
  EXPECT_EQ(e.kind(), QueryErrorKind::kUnknownVariable);
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.column(), 8);
}

TEST(ParseQueryTest, TwoPatternsWithLimit) {
  QueryAst ast = ParseQuery(
      "SELECT ?m ?a WHERE { ?m mmo:usesAlgorithmicProblem ?p . ?a mmo:solves ?p } "
      "LIMIT 10");
  EXPECT_EQ(ast.patterns.size(), 2u);
  EXPECT_EQ(ast.limit, 10u);
  EXPECT_FALSE(ast.offset.has_value());
  EXPECT_EQ(ast.OutputVariables(), (std::vector<std::string>{"m", "a"}));
}

TEST(ParseQueryTest, StarDistinctFiltersOffset) {
  QueryAst ast = ParseQuery(
      "select distinct * where {\n"
      "  ?s <http://ex.org/p> ?o .\n"
      "  ?o rdfs:label ?l .\n"
      "  FILTER(CONTAINS(?l, \"ray\"))\n"
      "  FILTER(?s = ex:A)\n"
      "} offset 2 limit 3");
  EXPECT_TRUE(ast.distinct);
  EXPECT_TRUE(ast.projection.empty());
  EXPECT_EQ(ast.OutputVariables(), (std::vector<std::string>{"s", "o", "l"}));
  ASSERT_EQ(ast.filters.size(), 2u);
  EXPECT_EQ(std::get<ContainsFilter>(ast.filters[0]).needle, "ray");
  EXPECT_EQ(std::get<EqualsFilter>(ast.filters[1]).variable, "s");
  EXPECT_EQ(ast.offset, 2u);
  EXPECT_EQ(ast.limit, 3u);
}

TEST(ParseQueryTest, ErrorKindsAndPositions) {
  QueryParseError e = QueryFailure("SELECT ?x WHERE {\n  ?x a }");
  EXPECT_EQ(e.kind(), QueryErrorKind::kUnexpectedToken);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 8);

  EXPECT_EQ(QueryFailure("SELECT ?x WHERE { ?x a ?y FILTER(CONTAINS(?x)) }").kind(),
            QueryErrorKind::kBadFilter);
  EXPECT_EQ(QueryFailure("SELECT ?x WHERE { ?x a ?y FILTER(?z = ex:A) }").kind(),
            QueryErrorKind::kUnknownVariable);
  EXPECT_EQ(QueryFailure("SELECT ?x WHERE { }").kind(),
            QueryErrorKind::kUnexpectedToken);
  EXPECT_EQ(QueryFailure("ASK { ?x a ?y }").kind(), QueryErrorKind::kUnexpectedToken);
  EXPECT_EQ(QueryFailure("SELECT ?x WHERE { ?x a ?y } LIMIT -1").kind(),
            QueryErrorKind::kUnexpectedToken);
}

TEST_F(SeedQueryTest, AlgorithmsByType) {
  BindingTable t = Run("SELECT ?a WHERE { ?a a mmo:Algorithm }");
  EXPECT_EQ(t.variables, std::vector<std::string>{"a"});
  EXPECT_EQ(Iris(t), (std::vector<std::vector<std::string>>{
                         {Ex("AlgebraicReconstructionTechnique")},
                         {Ex("FilteredBackProjection")}}));
}

TEST_F(SeedQueryTest, ModelsRelation) {
  BindingTable t = Run("SELECT ?m ?p WHERE { ?m mmo:models ?p }");
  EXPECT_EQ(Iris(t), (std::vector<std::vector<std::string>>{
                         {Ex("XRayTransform"), Ex("MicrofractureDetection")}}));
}

TEST_F(SeedQueryTest, BridgeJoin) {
  BindingTable t = Run(
      "SELECT ?m ?a WHERE { ?m mmo:usesAlgorithmicProblem ?p . ?a mmo:solves ?p }");
  EXPECT_EQ(Iris(t), (std::vector<std::vector<std::string>>{
                         {Ex("XRayTransform"), Ex("AlgebraicReconstructionTechnique")},
                         {Ex("XRayTransform"), Ex("FilteredBackProjection")}}));
}

TEST_F(SeedQueryTest, FiltersAndWindow) {
  BindingTable all = Run("SELECT ?e ?l WHERE { ?e rdfs:label ?l }");
  ASSERT_EQ(all.rows.size(), 10u);
  EXPECT_TRUE(std::is_sorted(all.rows.begin(), all.rows.end()));
  for (std::size_t off = 0; off <= 11; ++off) {
    for (std::size_t lim = 0; lim <= 4; ++lim) {
      BindingTable w = Run("SELECT ?e ?l WHERE { ?e rdfs:label ?l } LIMIT " +
                           std::to_string(lim) + " OFFSET " + std::to_string(off));
      std::size_t first = std::min(off, all.rows.size());
      std::size_t last = std::min(all.rows.size(), first + lim);
      EXPECT_EQ(w.rows, std::vector(all.rows.begin() + first, all.rows.begin() + last));
    }
  }
  BindingTable ray = Run(
      "SELECT ?e WHERE { ?e rdfs:label ?l FILTER(CONTAINS(?l, \"X-ray\")) }");
  EXPECT_EQ(ray.rows.size(), 3u);
  BindingTable eq = Run(
      "SELECT ?l WHERE { ?e rdfs:label ?l FILTER(?e = ex:RadiantEnergy) }");
  ASSERT_EQ(eq.rows.size(), 1u);
  EXPECT_EQ(eq.rows[0][0], Term::Literal("radiant energy"));
}

TEST_F(SeedQueryTest, DistinctIsIdentity) {
  for (const char* q : {"SELECT ?p WHERE { ?s ?p ?o }",
                        "SELECT ?s WHERE { ?s a ?c . ?s rdfs:label ?l }",
                        "SELECT * WHERE { ?s mmo:solves ?o }"}) {
    std::string distinct = std::string(q).insert(7, "DISTINCT ");
    EXPECT_EQ(Run(q), Run(distinct)) << q;
  }
}

TEST_F(SeedQueryTest, UnknownPrefix) {
  try {
    Run("SELECT ?x WHERE { ?x a nope:Thing }");
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_EQ(e.kind(), EvaluationErrorKind::kUnknownPrefix);
  }
}

TEST_F(SeedQueryTest, FormatTable) {
  BindingTable t = Run("SELECT ?m ?p WHERE { ?m mmo:models ?p }");
  EXPECT_EQ(FormatTable(t, snap().prefixes()),
            "?m               | ?p\n"
            "-----------------+--------------------------\n"
            "ex:XRayTransform | ex:MicrofractureDetection\n"
            "1 row\n");
}

TEST(EvaluateTest, EmptySnapshot) {
  GraphSnapshot empty;
  EXPECT_TRUE(Evaluate(ParseQuery("SELECT * WHERE { ?s ?p ?o }"), empty).rows.empty());
  EXPECT_TRUE(Evaluate(ParseQuery("SELECT ?s WHERE { ?s <http://ex.org/p> \"x\" }"), empty)
                  .rows.empty());
}

TEST(EvaluateTest, AgreesWithExhaustiveAssignment) {
  testing::Rng rng(51);
  for (int round = 0; round < 1000; ++round) {
    std::size_t entities = rng.Between(1, 6);
    std::size_t predicates = rng.Between(1, 3);
    std::vector<Triple> graph;
    std::size_t n = rng.Below(51);
    for (std::size_t i = 0; i < n; ++i) {
      graph.push_back(testing::RandomTriple(rng, entities, predicates, 0.2));
    }
    GraphSnapshot snap(graph, {{"ex", "http://ex.org/"}});
    testing::OracleQuery q = testing::RandomQuery(rng, graph, entities, predicates);
    std::vector<std::string> vars;
    auto expected = testing::BruteForceQuery(q, graph, &vars);
    QueryAst ast = ParseQuery(q.text);
    BindingTable got = Evaluate(ast, snap);
    ASSERT_EQ(got.variables, vars) << q.text;
    ASSERT_EQ(got.rows, std::vector(expected.begin(), expected.end())) << q.text;

    ast.projection = ast.OutputVariables();
    std::reverse(ast.patterns.begin(), ast.patterns.end());
    ASSERT_EQ(Evaluate(ast, snap).rows, got.rows) << q.text;
  }
}

}  // namespace
}  // namespace msokg
