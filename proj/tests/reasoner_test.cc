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
#include <chrono>
#include <set>

#include <gtest/gtest.h>

#include "msokg/reasoner.h"
#include "test_support.h"

namespace msokg {
namespace {

using testing::Ex;
using testing::Mso;

std::set<Triple> AsSet(const GraphSnapshot& s) {
  return {s.triples().begin(), s.triples().end()};
}

TEST(MaterializeTest, BridgeInverse) {
  Triple bridge = MakeTriple(Ex("XRayTransform"), Mso("usesAlgorithmicProblem"),
                             Ex("XRayInversion"));
  MaterializedGraph g = Materialize(std::vector{bridge}, BuiltinSchema());
  EXPECT_TRUE(g.snapshot().Contains(MakeTriple(
      Ex("XRayInversion"), Mso("usedByModelProblem"), Ex("XRayTransform"))));
  EXPECT_EQ(g.stats().inferred_count, 1u);
  EXPECT_EQ(g.stats().asserted_count, 1u);
  EXPECT_EQ(g.snapshot().size(), 2u);
}

TEST(MaterializeTest, GeneralizationChain) {
  std::vector<Triple> in = {MakeTriple(Ex("A"), Mso("generalizedBy"), Ex("B")),
                            MakeTriple(Ex("B"), Mso("generalizedBy"), Ex("C"))};
  MaterializedGraph g = Materialize(in, BuiltinSchema());
  EXPECT_EQ(g.stats().inferred_count, 4u);
  EXPECT_EQ(AsSet(g.snapshot()), testing::NaiveClosure(in, BuiltinSchema()));
  Triple closure = MakeTriple(Ex("A"), Mso("generalizedBy"), Ex("C"));
  TripleProvenance p = g.Explain(closure);
  EXPECT_EQ(p.status, ProvenanceStatus::kInferred);
  EXPECT_EQ(p.rule, Rule::kTransitive);
  ASSERT_EQ(p.premises.size(), 2u);
  EXPECT_EQ(p.premises[0], in[0]);
  EXPECT_EQ(p.premises[1], in[1]);
}

TEST(MaterializeTest, EmptyInput) {
  MaterializedGraph g = Materialize({}, BuiltinSchema());
  EXPECT_TRUE(g.snapshot().empty());
  EXPECT_EQ(g.stats().inferred_count, 0u);
  EXPECT_EQ(g.stats().iterations, 1);
  EXPECT_EQ(g.stats().rule_counts.at("InverseRule"), 0u);
  EXPECT_EQ(g.stats().rule_counts.at("TransitiveRule"), 0u);
}

TEST(MaterializeTest, SeedCounts) {
  std::vector<Triple> seed = testing::SeedAsserted();
  MaterializedGraph g = Materialize(seed, BuiltinSchema());
  std::set<Triple> oracle = testing::NaiveClosure(seed, BuiltinSchema());
  EXPECT_EQ(AsSet(g.snapshot()), oracle);
  EXPECT_EQ(g.stats().asserted_count, testing::kSeedAssertedCount);
  // One inverse per relation triple; the seed has no generalization chain
  // long enough to close.
  EXPECT_EQ(g.stats().inferred_count, testing::kSeedRelationCount);
  EXPECT_EQ(oracle.size() - testing::kSeedAssertedCount, testing::kSeedRelationCount);
  EXPECT_EQ(g.stats().rule_counts.at("InverseRule"), 10u);
  EXPECT_EQ(g.stats().rule_counts.at("TransitiveRule"), 0u);
}

TEST(MaterializeTest, AnnotationsPassThrough) {
  std::vector<Triple> in = {
      MakeLiteralTriple(Ex("A"), std::string(vocab::kRdfsLabel), "a"),
      MakeTriple(Ex("A"), Ex("unknown"), Ex("B")),
  };
  MaterializedGraph g = Materialize(in, BuiltinSchema());
  EXPECT_EQ(g.snapshot().size(), 2u);
  EXPECT_EQ(g.stats().inferred_count, 0u);
}

TEST(ExplainTest, AssertedAndInverse) {
  LoadedDataset seed = testing::LoadSeed();
  Triple bridge = MakeTriple(Ex("XRayTransform"), Mso("usesAlgorithmicProblem"),
                             Ex("XRayInversion"));
  TripleProvenance asserted = Explain(seed.graph, bridge);
  EXPECT_EQ(asserted.status, ProvenanceStatus::kAsserted);
  EXPECT_FALSE(asserted.rule.has_value());
  EXPECT_TRUE(asserted.premises.empty());

  TripleProvenance inv = Explain(
      seed.graph,
      MakeTriple(Ex("XRayInversion"), Mso("usedByModelProblem"), Ex("XRayTransform")));
  EXPECT_EQ(inv.status, ProvenanceStatus::kInferred);
  EXPECT_EQ(inv.rule, Rule::kInverse);
  ASSERT_EQ(inv.premises.size(), 1u);
  EXPECT_EQ(inv.premises[0], bridge);
}

TEST(ExplainTest, AbsentTriple) {
  LoadedDataset seed = testing::LoadSeed();
  EXPECT_THROW(Explain(seed.graph, MakeTriple(Ex("A"), Ex("p"), Ex("B"))),
               NotInGraph);
}

TEST(MaterializeTest, AgreesWithNaiveOracle) {
  Schema schema = BuiltinSchema();
  testing::Rng rng(41);
  for (int round = 0; round < 200; ++round) {
    std::size_t entities = rng.Between(2, 100);
    std::vector<Triple> in =
        testing::RandomSchemaGraph(rng, schema, entities, rng.Between(0, 300));
    auto start = std::chrono::steady_clock::now();
    MaterializedGraph g = Materialize(in, schema);
    auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_LT(elapsed, std::chrono::milliseconds(100));
    std::set<Triple> oracle = testing::NaiveClosure(in, schema);
    ASSERT_EQ(AsSet(g.snapshot()), oracle) << "round " << round;

    const InferenceStats& st = g.stats();
    EXPECT_EQ(st.asserted_count + st.inferred_count, g.snapshot().size());
    EXPECT_EQ(st.rule_counts.at("InverseRule") + st.rule_counts.at("TransitiveRule"),
              st.inferred_count);

    // Every inferred triple is explained by premises present in the result.
    for (const Triple& t : g.snapshot().triples()) {
      TripleProvenance p = g.Explain(t);
      if (p.status == ProvenanceStatus::kAsserted) {
        EXPECT_NE(std::find(in.begin(), in.end(), t), in.end());
        continue;
      }
      ASSERT_EQ(p.premises.size(), p.rule == Rule::kInverse ? 1u : 2u);
      for (const Triple& q : p.premises) {
        EXPECT_TRUE(g.snapshot().Contains(q));
      }
    }
  }
}

TEST(MaterializeTest, InverseSymmetryOrderIndependenceIdempotence) {
  Schema schema = BuiltinSchema();
  testing::Rng rng(42);
  for (int round = 0; round < 50; ++round) {
    std::vector<Triple> in =
        testing::RandomSchemaGraph(rng, schema, rng.Between(2, 30), 80);
    MaterializedGraph g = Materialize(in, schema);
    for (const Triple& t : g.snapshot().triples()) {
      const PropertyDef* p = schema.FindProperty(t.predicate.value);
      if (p == nullptr || !p->inverse_of) continue;
      EXPECT_TRUE(g.snapshot().Contains(
          Triple{t.object, Term::Iri(*p->inverse_of), t.subject}));
    }
    std::vector<Triple> shuffled = in;
    std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
    EXPECT_EQ(AsSet(Materialize(shuffled, schema).snapshot()), AsSet(g.snapshot()));

    std::vector<Triple> again(g.snapshot().triples().begin(),
                              g.snapshot().triples().end());
    MaterializedGraph twice = Materialize(again, schema);
    EXPECT_EQ(AsSet(twice.snapshot()), AsSet(g.snapshot()));
    EXPECT_EQ(twice.stats().inferred_count, 0u);
  }
}

}  // namespace
}  // namespace msokg
