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

#include "msokg/reasoner.h"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace msokg {

std::string_view ToString(Rule rule) {
  return rule == Rule::kInverse ? "InverseRule" : "TransitiveRule";
}

NotInGraph::NotInGraph(const Triple& t)
    : std::out_of_range("triple not in graph: " + ToString(t)) {}

MaterializedGraph::MaterializedGraph(
    GraphSnapshot snapshot, InferenceStats stats,
    std::map<Triple, TripleProvenance> derivations)
    : snapshot_(std::move(snapshot)),
      stats_(std::move(stats)),
      derivations_(std::move(derivations)) {}

TripleProvenance MaterializedGraph::Explain(const Triple& t) const {
  if (!snapshot_.Contains(t)) throw NotInGraph(t);
  auto it = derivations_.find(t);
  if (it == derivations_.end()) return TripleProvenance{};
  return it->second;
}

TripleProvenance Explain(const MaterializedGraph& graph, const Triple& t) {
  return graph.Explain(t);
}

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

struct IdTriple {
  std::uint32_t s;
  std::uint32_t p;
  std::uint32_t o;

  auto operator<=>(const IdTriple&) const = default;
  bool operator==(const IdTriple&) const = default;
};

struct IdTripleHash {
  std::size_t operator()(const IdTriple& t) const {
    std::uint64_t h = t.s;
    h = h * 0x9E3779B97F4A7C15ULL + t.p;
    h = h * 0x9E3779B97F4A7C15ULL + t.o;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

std::uint64_t PairKey(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Derivation {
  Rule rule;
  std::array<IdTriple, 2> premises;
};

// Fixpoint state over interned IRIs. Ids are assigned in sorted string order,
// so id order equals term order and the run is independent of input order.
class Closure {
 public:
  Closure(std::vector<std::string> names, std::vector<std::uint32_t> inverse,
          std::vector<bool> transitive)
      : names_(std::move(names)),
        inverse_(std::move(inverse)),
        transitive_(std::move(transitive)) {}

  bool Add(const IdTriple& t) {
    if (!all_.insert(t).second) return false;
    if (transitive_[t.p]) {
      out_[PairKey(t.p, t.s)].push_back(t.o);
      in_[PairKey(t.p, t.o)].push_back(t.s);
    }
    return true;
  }

  int Run(std::vector<IdTriple> delta) {
    int iterations = 0;
    while (true) {
      ++iterations;
      std::vector<IdTriple> next;
      auto derive = [&](const IdTriple& c, Rule rule, const IdTriple& a,
                        const IdTriple& b) {
        if (!Add(c)) return;
        next.push_back(c);
        derivations_.emplace(c, Derivation{rule, {a, b}});
      };
      for (const IdTriple& t : delta) {
        if (std::uint32_t q = inverse_[t.p]; q != kNone) {
          derive({t.o, q, t.s}, Rule::kInverse, t, t);
        }
        if (transitive_[t.p]) {
          // t as the left premise: (s p o), (o p c).
          if (auto it = out_.find(PairKey(t.p, t.o)); it != out_.end()) {
            std::vector<std::uint32_t> tails = it->second;
            for (std::uint32_t c : tails) {
              derive({t.s, t.p, c}, Rule::kTransitive, t, {t.o, t.p, c});
            }
          }
          // t as the right premise: (a p s), (s p o).
          if (auto it = in_.find(PairKey(t.p, t.s)); it != in_.end()) {
            std::vector<std::uint32_t> heads = it->second;
            for (std::uint32_t a : heads) {
              derive({a, t.p, t.o}, Rule::kTransitive, {a, t.p, t.s}, t);
            }
          }
        }
      }
      if (next.empty()) return iterations;
      std::sort(next.begin(), next.end());
      delta = std::move(next);
    }
  }

  Triple ToTriple(const IdTriple& t) const {
    return MakeTriple(names_[t.s], names_[t.p], names_[t.o]);
  }

  const std::unordered_map<IdTriple, Derivation, IdTripleHash>& derivations()
      const {
    return derivations_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> inverse_;
  std::vector<bool> transitive_;
  std::unordered_set<IdTriple, IdTripleHash> all_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> out_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> in_;
  std::unordered_map<IdTriple, Derivation, IdTripleHash> derivations_;
};

}  // namespace

MaterializedGraph Materialize(std::span<const Triple> asserted,
                              const Schema& schema, PrefixMap prefixes) {
  std::vector<Triple> base(asserted.begin(), asserted.end());
  for (const Triple& t : base) CheckTriple(t);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  auto is_rule_input = [&](const Triple& t) {
    const PropertyDef* p = schema.FindProperty(t.predicate.value);
    return p != nullptr && p->kind == PropertyKind::kObject &&
           t.object.is_iri();
  };

  // Every IRI that can appear in a derived triple: rule-input endpoints plus
  // the object properties themselves.
  std::vector<std::string> names;
  for (const Triple& t : base) {
    if (!is_rule_input(t)) continue;
    names.push_back(t.subject.value);
    names.push_back(t.object.value);
  }
  for (const auto& [iri, p] : schema.properties) {
    if (p.kind == PropertyKind::kObject) names.push_back(iri);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto id_of = [&](const std::string& iri) {
    return static_cast<std::uint32_t>(
        std::lower_bound(names.begin(), names.end(), iri) - names.begin());
  };

  std::vector<std::uint32_t> inverse(names.size(), kNone);
  std::vector<bool> transitive(names.size(), false);
  for (const auto& [iri, p] : schema.properties) {
    if (p.kind != PropertyKind::kObject) continue;
    std::uint32_t id = id_of(iri);
    if (p.inverse_of) {
      if (auto q = schema.FindProperty(*p.inverse_of);
          q != nullptr && q->kind == PropertyKind::kObject) {
        inverse[id] = id_of(q->iri);
      }
    }
    transitive[id] = p.transitive;
  }

  Closure closure(names, std::move(inverse), std::move(transitive));
  std::vector<IdTriple> delta;
  for (const Triple& t : base) {
    if (!is_rule_input(t)) continue;
    IdTriple id{id_of(t.subject.value), id_of(t.predicate.value),
                id_of(t.object.value)};
    closure.Add(id);
    delta.push_back(id);
  }
  std::sort(delta.begin(), delta.end());
  int iterations = closure.Run(std::move(delta));

  InferenceStats stats;
  stats.asserted_count = base.size();
  stats.iterations = iterations;
  stats.rule_counts[std::string(ToString(Rule::kInverse))] = 0;
  stats.rule_counts[std::string(ToString(Rule::kTransitive))] = 0;

  std::map<Triple, TripleProvenance> derivations;
  std::vector<Triple> all = std::move(base);
  for (const auto& [id, d] : closure.derivations()) {
    TripleProvenance prov;
    prov.status = ProvenanceStatus::kInferred;
    prov.rule = d.rule;
    prov.premises.push_back(closure.ToTriple(d.premises[0]));
    if (d.rule == Rule::kTransitive) {
      prov.premises.push_back(closure.ToTriple(d.premises[1]));
    }
    ++stats.rule_counts[std::string(ToString(d.rule))];
    Triple t = closure.ToTriple(id);
    all.push_back(t);
    derivations.emplace(std::move(t), std::move(prov));
  }
  stats.inferred_count = derivations.size();

  return MaterializedGraph(GraphSnapshot(std::move(all), std::move(prefixes)),
                           std::move(stats), std::move(derivations));
}

}  // namespace msokg
