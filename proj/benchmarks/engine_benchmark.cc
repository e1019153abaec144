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


#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "msokg/dataset.h"
#include "msokg/query.h"
#include "msokg/reasoner.h"
#include "msokg/schema.h"
#include "msokg/turtle.h"

namespace msokg {
namespace {

const std::string kEx = "http://bench.example/";

// A layered MSO graph: `width` entities per chain class, each linked to two
// entities of the next class, plus generalization chains among formulations.
std::vector<Triple> ChainGraph(std::size_t width) {
  const std::string ns(vocab::kMso);
  const std::vector<std::string> classes = {
      "ApplicationDomain", "ApplicationProblem", "MathematicalModel",
      "AlgorithmicProblem", "Algorithm", "Software"};
  const std::vector<std::string> edges = {"containsProblem", "modeledBy",
                                          "usesAlgorithmicProblem", "solvedBy",
                                          "implementedBy"};
  std::mt19937_64 rng(7);
  std::vector<Triple> out;
  auto node = [&](std::size_t layer, std::size_t i) {
    return kEx + classes[layer] + std::to_string(i);
  };
  for (std::size_t layer = 0; layer < classes.size(); ++layer) {
    for (std::size_t i = 0; i < width; ++i) {
      out.push_back(MakeTriple(node(layer, i), vocab::kRdfType, ns + classes[layer]));
      out.push_back(MakeLiteralTriple(node(layer, i), std::string(vocab::kRdfsLabel),
                                      classes[layer] + " " + std::to_string(i)));
      if (layer + 1 == classes.size()) continue;
      for (int k = 0; k < 2; ++k) {
        out.push_back(MakeTriple(node(layer, i), ns + edges[layer],
                                 node(layer + 1, rng() % width)));
      }
    }
  }
  for (std::size_t i = 0; i + 1 < width; ++i) {
    std::string f = kEx + "Formulation" + std::to_string(i);
    out.push_back(MakeTriple(f, vocab::kRdfType, ns + "MathematicalFormulation"));
    out.push_back(MakeTriple(f, ns + "generalizedBy", kEx + "Formulation" +
                                                          std::to_string(i + 1)));
  }
  return out;
}

void BM_Materialize(benchmark::State& state) {
  Schema schema = BuiltinSchema();
  std::vector<Triple> in = ChainGraph(static_cast<std::size_t>(state.range(0)));
  std::size_t total = 0;
  for (auto _ : state) {
    MaterializedGraph g = Materialize(in, schema);
    total = g.snapshot().size();
    benchmark::DoNotOptimize(total);
  }
  state.counters["asserted"] = static_cast<double>(in.size());
  state.counters["total"] = static_cast<double>(total);
}
BENCHMARK(BM_Materialize)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EvaluateJoin(benchmark::State& state) {
  MaterializedGraph g = Materialize(
      ChainGraph(static_cast<std::size_t>(state.range(0))), BuiltinSchema(),
      {{"mmo", std::string(vocab::kMso)}});
  QueryAst ast = ParseQuery(
      "SELECT ?m ?a WHERE { ?m mmo:usesAlgorithmicProblem ?p . "
      "?a mmo:solves ?p . ?a a mmo:Algorithm }");
  std::size_t rows = 0;
  for (auto _ : state) {
    BindingTable t = Evaluate(ast, g.snapshot());
    rows = t.rows.size();
    benchmark::DoNotOptimize(rows);
  }
  state.counters["rows"] = static_cast<double>(rows);
}
BENCHMARK(BM_EvaluateJoin)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_ParseTurtle(benchmark::State& state) {
  MaterializedGraph g = Materialize(
      ChainGraph(static_cast<std::size_t>(state.range(0))), BuiltinSchema(),
      {{"mmo", std::string(vocab::kMso)}, {"b", kEx}});
  std::string text = SerializeTurtle(g.snapshot());
  for (auto _ : state) {
    ParsedDocument doc = ParseTurtle(text);
    benchmark::DoNotOptimize(doc.triples.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseTurtle)->Arg(10)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_SerializeTurtle(benchmark::State& state) {
  MaterializedGraph g = Materialize(
      ChainGraph(static_cast<std::size_t>(state.range(0))), BuiltinSchema(),
      {{"mmo", std::string(vocab::kMso)}, {"b", kEx}});
  for (auto _ : state) {
    std::string text = SerializeTurtle(g.snapshot());
    benchmark::DoNotOptimize(text.data());
  }
}
BENCHMARK(BM_SerializeTurtle)->Arg(10)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_LoadSeed(benchmark::State& state) {
  const std::vector<std::string> paths = {
      std::string(MSOKG_SOURCE_DIR) + "/schema/mso.ttl",
      std::string(MSOKG_SOURCE_DIR) + "/seed/xrct.ttl"};
  for (auto _ : state) {
    LoadedDataset ds = LoadDataset(paths);
    benchmark::DoNotOptimize(ds.graph.snapshot().size());
  }
}
BENCHMARK(BM_LoadSeed)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace msokg

BENCHMARK_MAIN();
