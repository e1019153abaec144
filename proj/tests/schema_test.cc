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


#include <map>
#include <set>

#include <gtest/gtest.h>

#include "msokg/dataset.h"
#include "msokg/schema.h"
#include "test_support.h"

namespace msokg {
namespace {

using testing::Mso;

SchemaError SchemaFailure(std::string_view text) {
  try {
    SchemaFromTriples(ParseTurtle(text));
  } catch (const SchemaError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a schema error";
  return SchemaError(SchemaErrorKind::kDuplicateIri, "", "");
}

constexpr char kHead[] =
    "@prefix mmo: <https://example.org/mardi/mso#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";

TEST(BuiltinSchemaTest, MathematicalModelClass) {
  Schema s = BuiltinSchema();
  const ClassDef* c = s.FindClass(Mso("MathematicalModel"));
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->label, "Mathematical Model");
  EXPECT_EQ(c->ontology, Ontology::kMathModDB);
}

TEST(BuiltinSchemaTest, BridgeProperty) {
  Schema s = BuiltinSchema();
  const PropertyDef* p = s.FindProperty(Mso("usesAlgorithmicProblem"));
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->domain, Mso("MathematicalModel"));
  EXPECT_EQ(p->range, Mso("AlgorithmicProblem"));
  EXPECT_EQ(p->inverse_of, Mso("usedByModelProblem"));
  EXPECT_EQ(p->kind, PropertyKind::kObject);
}

TEST(BuiltinSchemaTest, TestsProperty) {
  Schema s = BuiltinSchema();
  const PropertyDef* p = s.FindProperty(Mso("tests"));
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->domain, Mso("Benchmark"));
  EXPECT_EQ(p->range, Mso("Algorithm"));
}

TEST(BuiltinSchemaTest, ClassInventory) {
  Schema s = BuiltinSchema();
  std::map<std::string, Ontology> expected = {
      {"ApplicationDomain", Ontology::kMathModDB},
      {"ApplicationProblem", Ontology::kMathModDB},
      {"MathematicalModel", Ontology::kMathModDB},
      {"MathematicalFormulation", Ontology::kMathModDB},
      {"Quantity", Ontology::kMathModDB},
      {"AlgorithmicProblem", Ontology::kAlgoData},
      {"Algorithm", Ontology::kAlgoData},
      {"Software", Ontology::kAlgoData},
      {"Benchmark", Ontology::kAlgoData},
      {"Publication", Ontology::kAlgoData}};
  ASSERT_EQ(s.classes.size(), expected.size());
  for (const auto& [local, onto] : expected) {
    const ClassDef* c = s.FindClass(Mso(local));
    ASSERT_NE(c, nullptr) << local;
    EXPECT_EQ(c->ontology, onto) << local;
  }
}

// Forward property table: domain, range, inverse, transitive.
TEST(BuiltinSchemaTest, PropertyTable) {
  struct Row {
    const char* p;
    const char* domain;
    const char* range;
    const char* inverse;
    bool transitive;
  };
  const Row rows[] = {
      {"models", "MathematicalModel", "ApplicationProblem", "modeledBy", false},
      {"containedInDomain", "ApplicationProblem", "ApplicationDomain",
       "containsProblem", false},
      {"containsFormulation", "MathematicalModel", "MathematicalFormulation",
       "formulationOf", false},
      {"generalizedBy", "MathematicalFormulation", "MathematicalFormulation",
       "generalizes", true},
      {"containsQuantity", "MathematicalFormulation", "Quantity", "quantityOf",
       false},
      {"specializesModel", "MathematicalModel", "MathematicalModel",
       "specializedByModel", true},
      {"usesAlgorithmicProblem", "MathematicalModel", "AlgorithmicProblem",
       "usedByModelProblem", false},
      {"solves", "Algorithm", "AlgorithmicProblem", "solvedBy", false},
      {"specializesAlgorithm", "Algorithm", "Algorithm", "specializedByAlgorithm",
       true},
      {"invents", "Publication", "Algorithm", "inventedIn", false},
      {"studies", "Publication", "Algorithm", "studiedIn", false},
      {"analyzes", "Publication", "Algorithm", "analyzedIn", false},
      {"implements", "Software", "Algorithm", "implementedBy", false},
      {"tests", "Benchmark", "Algorithm", "testedBy", false},
  };
  Schema s = BuiltinSchema();
  EXPECT_EQ(s.properties.size(), 28u);
  for (const Row& r : rows) {
    const PropertyDef* p = s.FindProperty(Mso(r.p));
    ASSERT_NE(p, nullptr) << r.p;
    EXPECT_EQ(p->domain, Mso(r.domain)) << r.p;
    EXPECT_EQ(p->range, Mso(r.range)) << r.p;
    EXPECT_EQ(p->inverse_of, Mso(r.inverse)) << r.p;
    EXPECT_EQ(p->transitive, r.transitive) << r.p;
    const PropertyDef* q = s.FindProperty(Mso(r.inverse));
    ASSERT_NE(q, nullptr) << r.inverse;
    EXPECT_EQ(q->domain, Mso(r.range));
    EXPECT_EQ(q->range, Mso(r.domain));
    EXPECT_EQ(q->inverse_of, Mso(r.p));
  }
}

TEST(BuiltinSchemaTest, InversesFormPerfectMatching) {
  Schema s = BuiltinSchema();
  std::set<std::set<std::string>> pairs;
  for (const auto& [iri, p] : s.properties) {
    ASSERT_TRUE(p.inverse_of.has_value()) << iri;
    ASSERT_NE(*p.inverse_of, iri);
    const PropertyDef* q = s.FindProperty(*p.inverse_of);
    ASSERT_NE(q, nullptr);
    EXPECT_EQ(q->inverse_of, iri);
    pairs.insert({iri, *p.inverse_of});
  }
  EXPECT_EQ(pairs.size(), 14u);
}

TEST(BuiltinSchemaTest, DomainsAndRangesResolve) {
  Schema s = BuiltinSchema();
  for (const auto& [iri, p] : s.properties) {
    EXPECT_NE(s.FindClass(p.domain), nullptr) << iri;
    EXPECT_NE(s.FindClass(p.range), nullptr) << iri;
  }
  EXPECT_NO_THROW(CheckSchema(s));
}

TEST(BuiltinSchemaTest, AnnotationPredicates) {
  Schema s = BuiltinSchema();
  EXPECT_EQ(s.annotation_predicates,
            (std::set<std::string>{std::string(vocab::kRdfsLabel),
                                   std::string(vocab::kRdfsComment),
                                   Mso("formulaLatex"), Mso("externalId")}));
}

TEST(SchemaFromTriplesTest, ShippedFileEqualsBuiltin) {
  auto doc = ParseTurtle(ReadFileOrThrow(testing::SchemaFile()));
  EXPECT_TRUE(DeclaresSchema(doc));
  EXPECT_EQ(SchemaFromTriples(doc), BuiltinSchema());
}

TEST(SchemaFromTriplesTest, SerializationFixedPoint) {
  Schema s = BuiltinSchema();
  EXPECT_EQ(SchemaFromTriples(ParseTurtle(SerializeSchema(s))), s);
}

TEST(SchemaFromTriplesTest, CustomNamespaceFixedPoint) {
  Schema s = BuiltinSchema("http://alt.example/onto/");
  Schema back = SchemaFromTriples(ParseTurtle(SerializeSchema(s)));
  EXPECT_EQ(back, s);
  EXPECT_NE(back.FindClass("http://alt.example/onto/Algorithm"), nullptr);
}

TEST(SchemaFromTriplesTest, EmptyDocument) {
  Schema s = SchemaFromTriples(ParseTurtle(""));
  EXPECT_TRUE(s.classes.empty());
  EXPECT_TRUE(s.properties.empty());
}

TEST(SchemaFromTriplesTest, OneDirectionalInverse) {
  SchemaError e = SchemaFailure(std::string(kHead) +
                                "mmo:A a owl:Class .\n"
                                "mmo:p a owl:ObjectProperty ; rdfs:domain mmo:A ;"
                                " rdfs:range mmo:A ; owl:inverseOf mmo:q .\n"
                                "mmo:q a owl:ObjectProperty ; rdfs:domain mmo:A ;"
                                " rdfs:range mmo:A .\n");
  EXPECT_EQ(e.kind(), SchemaErrorKind::kAsymmetricInverse);
}

TEST(SchemaFromTriplesTest, InverseWithMismatchedDomain) {
  SchemaError e = SchemaFailure(std::string(kHead) +
                                "mmo:A a owl:Class . mmo:B a owl:Class .\n"
                                "mmo:p a owl:ObjectProperty ; rdfs:domain mmo:A ;"
                                " rdfs:range mmo:B ; owl:inverseOf mmo:q .\n"
                                "mmo:q a owl:ObjectProperty ; rdfs:domain mmo:A ;"
                                " rdfs:range mmo:B ; owl:inverseOf mmo:p .\n");
  EXPECT_EQ(e.kind(), SchemaErrorKind::kAsymmetricInverse);
}

TEST(SchemaFromTriplesTest, DanglingRange) {
  SchemaError e = SchemaFailure(std::string(kHead) +
                                "mmo:A a owl:Class .\n"
                                "mmo:p a owl:ObjectProperty ; rdfs:domain mmo:A ;"
                                " rdfs:range mmo:Nowhere .\n");
  EXPECT_EQ(e.kind(), SchemaErrorKind::kDanglingDomainRange);
  EXPECT_EQ(e.iri(), Mso("p"));
}

TEST(SchemaFromTriplesTest, ClassAndPropertyCollide) {
  SchemaError e = SchemaFailure(std::string(kHead) +
                                "mmo:A a owl:Class , owl:ObjectProperty .\n");
  EXPECT_EQ(e.kind(), SchemaErrorKind::kDuplicateIri);
  EXPECT_EQ(e.iri(), Mso("A"));
}

TEST(SchemaFromTriplesTest, TransitiveNeedsEqualDomainAndRange) {
  SchemaError e = SchemaFailure(std::string(kHead) +
                                "mmo:A a owl:Class . mmo:B a owl:Class .\n"
                                "mmo:p a owl:TransitiveProperty ; rdfs:domain mmo:A ;"
                                " rdfs:range mmo:B .\n");
  EXPECT_EQ(e.kind(), SchemaErrorKind::kTransitiveDomainRange);
}

TEST(SchemaFromTriplesTest, InstanceDataDeclaresNothing) {
  EXPECT_FALSE(DeclaresSchema(ParseTurtle(ReadFileOrThrow(testing::SeedFile()))));
}

}  // namespace
}  // namespace msokg
