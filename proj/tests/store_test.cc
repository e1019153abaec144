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
#include <set>

#include <gtest/gtest.h>

#include "msokg/store.h"
#include "test_support.h"

namespace msokg {
namespace {

using testing::Ex;
using testing::Mso;
using testing::Rng;

TEST(TermTest, IriValidity) {
  EXPECT_TRUE(IsValidIri("http://ex.org/A"));
  EXPECT_FALSE(IsValidIri(""));
  EXPECT_FALSE(IsValidIri("http://ex.org/a b"));
  EXPECT_FALSE(IsValidIri("http://ex.org/<a>"));
  EXPECT_THROW(CheckTerm(Term::Iri("")), StructuralError);
  EXPECT_THROW(CheckTerm(Term::Literal("x", "en", "http://dt")),
               StructuralError);
  Triple literal_subject{Term::Literal("s"), Term::Iri("http://p"),
                         Term::Iri("http://o")};
  EXPECT_THROW(CheckTriple(literal_subject), StructuralError);
}

TEST(TermTest, IrisOrderBeforeLiterals) {
  EXPECT_LT(Term::Iri("zzz:z"), Term::Literal("a"));
  EXPECT_LT(Term::Literal("a"), Term::Literal("a", "en"));
}

TEST(TermTest, CompactUsesLongestNamespace) {
  PrefixMap pm{{"ex", "http://ex.org/"}, {"exa", "http://ex.org/a/"}};
  EXPECT_EQ(CompactIri("http://ex.org/a/b", pm), "exa:b");
  EXPECT_EQ(CompactIri("http://ex.org/b", pm), "ex:b");
  EXPECT_EQ(CompactIri("http://ex.org/x/y", pm), "");
  EXPECT_EQ(CompactIri("http://other/x", pm), "");
  EXPECT_EQ(DisplayIri("http://other/x", pm), "<http://other/x>");
}

TEST(TermTest, ExpandIri) {
  PrefixMap pm{{"ex", "http://ex.org/"}};
  EXPECT_EQ(ExpandIri("ex:A", pm), "http://ex.org/A");
  EXPECT_EQ(ExpandIri("<http://z/q>", pm), "http://z/q");
  EXPECT_EQ(ExpandIri("http://z/q", pm), "http://z/q");
  EXPECT_EQ(ExpandIri("nope:A", pm), "");
  EXPECT_EQ(ExpandIri("plain", pm), "");
}

TEST(StoreTest, InsertIntoEmptyStore) {
  TripleStore store;
  EXPECT_TRUE(store.Insert(MakeTriple("http://ex.org/A", "http://ex.org/p",
                                      "http://ex.org/B")));
  EXPECT_EQ(store.size(), 1u);
}

TEST(StoreTest, InsertIsIdempotent) {
  TripleStore store;
  Triple t = MakeTriple("http://ex.org/A", "http://ex.org/p", "http://ex.org/B");
  EXPECT_TRUE(InsertTriple(store, t));
  EXPECT_FALSE(InsertTriple(store, t));
  EXPECT_EQ(store.size(), 1u);
}

TEST(StoreTest, RejectsMalformedTriple) {
  TripleStore store;
  EXPECT_THROW(store.Insert(MakeTriple("", "http://ex.org/p", "http://ex.org/B")),
               StructuralError);
  EXPECT_EQ(store.size(), 0u);
}

TEST(StoreTest, SeedTripleCount) {
  TripleStore store;
  for (const Triple& t : testing::SeedAsserted()) store.Insert(t);
  EXPECT_EQ(store.size(), testing::kSeedAssertedCount);
}

TEST(StoreTest, IndexCoherenceOnRandomInsertions) {
  Rng rng(11);
  TripleStore store;
  std::set<Triple> reference;
  for (int i = 0; i < 1500; ++i) {
    Triple t = testing::RandomTriple(rng, 40, 6);
    EXPECT_EQ(store.Insert(t), reference.insert(t).second);
  }
  ASSERT_GE(reference.size(), 1000u);
  std::vector<Triple> expected(reference.begin(), reference.end());
  for (IndexOrder order : {IndexOrder::kSpo, IndexOrder::kPos, IndexOrder::kOsp}) {
    std::vector<Triple> got = store.Enumerate(order);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
  GraphSnapshot snap = store.Snapshot({});
  for (IndexOrder order : {IndexOrder::kSpo, IndexOrder::kPos, IndexOrder::kOsp}) {
    std::vector<Triple> got = snap.Enumerate(order);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(StoreTest, EnumerationFollowsIndexOrder) {
  Rng rng(12);
  std::vector<Triple> triples;
  for (int i = 0; i < 300; ++i) triples.push_back(testing::RandomTriple(rng, 10, 3));
  GraphSnapshot snap(triples, {});
  auto pos = snap.Enumerate(IndexOrder::kPos);
  EXPECT_TRUE(std::is_sorted(pos.begin(), pos.end(), [](const Triple& a, const Triple& b) {
    return std::tie(a.predicate, a.object, a.subject) <
           std::tie(b.predicate, b.object, b.subject);
  }));
  auto osp = snap.Enumerate(IndexOrder::kOsp);
  EXPECT_TRUE(std::is_sorted(osp.begin(), osp.end(), [](const Triple& a, const Triple& b) {
    return std::tie(a.object, a.subject, a.predicate) <
           std::tie(b.object, b.subject, b.predicate);
  }));
}

TEST(MatchTest, AlgorithmsInSeed) {
  LoadedDataset seed = testing::LoadSeed();
  auto got = MatchPattern(seed.graph.snapshot(),
                          {std::nullopt, Term::Iri(std::string(vocab::kRdfType)),
                           Term::Iri(Mso("Algorithm"))});
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].subject.value, Ex("AlgebraicReconstructionTechnique"));
  EXPECT_EQ(got[1].subject.value, Ex("FilteredBackProjection"));
}

TEST(MatchTest, FullyBoundPattern) {
  LoadedDataset seed = testing::LoadSeed();
  Triple t = MakeTriple(Ex("XRayTransform"), Mso("models"),
                        Ex("MicrofractureDetection"));
  auto got = MatchPattern(seed.graph.snapshot(), {t.subject, t.predicate, t.object});
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0], t);
}

TEST(MatchTest, UnboundPatternReturnsEverything) {
  Rng rng(13);
  std::vector<Triple> triples;
  while (triples.size() < 50) {
    Triple t = testing::RandomTriple(rng, 30, 5);
    if (std::find(triples.begin(), triples.end(), t) == triples.end()) {
      triples.push_back(t);
    }
  }
  GraphSnapshot snap(triples, {});
  auto got = snap.Match({});
  std::sort(triples.begin(), triples.end());
  EXPECT_EQ(got, triples);
}

TEST(MatchTest, AgreesWithLinearScan) {
  Rng rng(14);
  for (int round = 0; round < 200; ++round) {
    std::vector<Triple> triples;
    std::size_t n = rng.Below(201);
    for (std::size_t i = 0; i < n; ++i) {
      triples.push_back(testing::RandomTriple(rng, 12, 4, 0.3));
    }
    GraphSnapshot snap(triples, {});
    std::set<Triple> unique(triples.begin(), triples.end());
    for (int q = 0; q < 20; ++q) {
      Triple probe = !triples.empty() && rng.Chance(0.7)
                         ? rng.Pick(triples)
                         : testing::RandomTriple(rng, 12, 4, 0.3);
      TriplePattern pattern;
      if (rng.Chance(0.5)) pattern.subject = probe.subject;
      if (rng.Chance(0.5)) pattern.predicate = probe.predicate;
      if (rng.Chance(0.5)) pattern.object = probe.object;
      std::vector<Triple> expected;
      for (const Triple& t : unique) {
        if ((!pattern.subject || *pattern.subject == t.subject) &&
            (!pattern.predicate || *pattern.predicate == t.predicate) &&
            (!pattern.object || *pattern.object == t.object)) {
          expected.push_back(t);
        }
      }
      ASSERT_EQ(snap.Match(pattern), expected);
      ASSERT_EQ(snap.Count(pattern), expected.size());
    }
  }
}

TEST(EntityRecordTest, XRayTransformOutgoing) {
  LoadedDataset seed = testing::LoadSeed();
  EntityRecord r = GetEntityRecord(seed.graph.snapshot(), Ex("XRayTransform"));
  auto has = [&](const std::string& p, const std::string& o) {
    return std::find(r.outgoing.begin(), r.outgoing.end(),
                     std::pair{p, o}) != r.outgoing.end();
  };
  EXPECT_TRUE(has(Mso("models"), Ex("MicrofractureDetection")));
  EXPECT_TRUE(has(Mso("usesAlgorithmicProblem"), Ex("XRayInversion")));
  EXPECT_EQ(r.types, std::set<std::string>{Mso("MathematicalModel")});
  EXPECT_EQ(r.label, "X-ray transform");
}

TEST(EntityRecordTest, UnknownIri) {
  LoadedDataset seed = testing::LoadSeed();
  EntityRecord r = GetEntityRecord(seed.graph.snapshot(), Ex("NoSuchThing"));
  EXPECT_TRUE(r.empty());
  EXPECT_FALSE(r.label.has_value());
}

TEST(EntityRecordTest, XRayInversionSeesBridgeBothWays) {
  LoadedDataset seed = testing::LoadSeed();
  EntityRecord r = GetEntityRecord(seed.graph.snapshot(), Ex("XRayInversion"));
  std::pair<std::string, std::string> in{Mso("usesAlgorithmicProblem"),
                                         Ex("XRayTransform")};
  std::pair<std::string, std::string> out{Mso("usedByModelProblem"),
                                          Ex("XRayTransform")};
  EXPECT_NE(std::find(r.incoming.begin(), r.incoming.end(), in), r.incoming.end());
  EXPECT_NE(std::find(r.outgoing.begin(), r.outgoing.end(), out), r.outgoing.end());
}

// Every triple mentioning an IRI shows up exactly once per role it plays.
TEST(EntityRecordTest, CompletenessOnRandomGraphs) {
  Rng rng(15);
  for (int round = 0; round < 100; ++round) {
    std::vector<Triple> triples;
    for (int i = 0; i < 60; ++i) triples.push_back(testing::RandomTriple(rng, 8, 3));
    if (rng.Chance(0.5)) {
      triples.push_back(MakeTriple("http://ex.org/e1", vocab::kRdfType,
                                   "http://ex.org/e2"));
    }
    GraphSnapshot snap(triples, {});
    for (int e = 0; e < 8; ++e) {
      std::string iri = "http://ex.org/e" + std::to_string(e);
      EntityRecord r = GetEntityRecord(snap, iri);
      std::size_t expected = 0;
      for (const Triple& t : snap.triples()) {
        if (t.subject.value == iri) ++expected;
        if (t.object.is_iri() && t.object.value == iri) ++expected;
      }
      EXPECT_EQ(r.types.size() + r.literal_attributes.size() +
                    r.outgoing.size() + r.incoming.size(),
                expected);
    }
  }
}

}  // namespace
}  // namespace msokg
