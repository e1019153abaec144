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

#include "msokg/schema.h"

#include <array>
#include <utility>

#include "msokg/store.h"

namespace msokg {

namespace {

std::string Rdfs(std::string_view local) {
  return std::string(vocab::kRdfs) + std::string(local);
}
std::string Owl(std::string_view local) {
  return std::string(vocab::kOwl) + std::string(local);
}

struct ClassSpec {
  std::string_view local;
  std::string_view label;
  Ontology ontology;
};

constexpr std::array<ClassSpec, 10> kClasses = {{
    {"ApplicationDomain", "Application Domain", Ontology::kMathModDB},
    {"ApplicationProblem", "Application Problem", Ontology::kMathModDB},
    {"MathematicalModel", "Mathematical Model", Ontology::kMathModDB},
    {"MathematicalFormulation", "Mathematical Formulation",
     Ontology::kMathModDB},
    {"Quantity", "Quantity", Ontology::kMathModDB},
    {"AlgorithmicProblem", "Algorithmic Problem", Ontology::kAlgoData},
    {"Algorithm", "Algorithm", Ontology::kAlgoData},
    {"Software", "Software", Ontology::kAlgoData},
    {"Benchmark", "Benchmark", Ontology::kAlgoData},
    {"Publication", "Publication", Ontology::kAlgoData},
}};

// One forward property and its named inverse.
struct PairSpec {
  std::string_view local;
  std::string_view label;
  std::string_view domain;
  std::string_view range;
  std::string_view inverse_local;
  std::string_view inverse_label;
  bool transitive;
};

constexpr std::array<PairSpec, 14> kPairs = {{
    {"models", "models", "MathematicalModel", "ApplicationProblem",
     "modeledBy", "modeled by", false},
    {"containedInDomain", "is contained in domain", "ApplicationProblem",
     "ApplicationDomain", "containsProblem", "contains problem", false},
    {"containsFormulation", "contains formulation", "MathematicalModel",
     "MathematicalFormulation", "formulationOf", "formulation of", false},
    {"generalizedBy", "generalized by", "MathematicalFormulation",
     "MathematicalFormulation", "generalizes", "generalizes", true},
    {"containsQuantity", "contains quantity", "MathematicalFormulation",
     "Quantity", "quantityOf", "quantity of", false},
    {"specializesModel", "specializes model", "MathematicalModel",
     "MathematicalModel", "specializedByModel", "specialized by model", true},
    {"usesAlgorithmicProblem", "uses algorithmic problem", "MathematicalModel",
     "AlgorithmicProblem", "usedByModelProblem", "used by model problem",
     false},
    {"solves", "solves", "Algorithm", "AlgorithmicProblem", "solvedBy",
     "solved by", false},
    {"specializesAlgorithm", "specializes algorithm", "Algorithm", "Algorithm",
     "specializedByAlgorithm", "specialized by algorithm", true},
    {"invents", "invents", "Publication", "Algorithm", "inventedIn",
     "invented in", false},
    {"studies", "studies", "Publication", "Algorithm", "studiedIn",
     "studied in", false},
    {"analyzes", "analyzes", "Publication", "Algorithm", "analyzedIn",
     "analyzed in", false},
    {"implements", "implements", "Software", "Algorithm", "implementedBy",
     "implemented by", false},
    {"tests", "tests", "Benchmark", "Algorithm", "testedBy", "tested by",
     false},
}};

}  // namespace

std::string_view ToString(Ontology o) {
  return o == Ontology::kMathModDB ? "MathModDB" : "AlgoData";
}

std::string_view ToString(SchemaErrorKind kind) {
  switch (kind) {
    case SchemaErrorKind::kDanglingDomainRange: return "DanglingDomainRange";
    case SchemaErrorKind::kAsymmetricInverse: return "AsymmetricInverse";
    case SchemaErrorKind::kDuplicateIri: return "DuplicateIri";
    case SchemaErrorKind::kTransitiveDomainRange:
      return "TransitiveDomainRange";
  }
  return "Unknown";
}

SchemaError::SchemaError(SchemaErrorKind kind, std::string iri,
                         std::string message)
    : std::runtime_error(std::string(ToString(kind)) + " <" + iri +
                         ">: " + message),
      kind_(kind),
      iri_(std::move(iri)) {}

const ClassDef* Schema::FindClass(std::string_view iri) const {
  auto it = classes.find(std::string(iri));
  return it == classes.end() ? nullptr : &it->second;
}

const PropertyDef* Schema::FindProperty(std::string_view iri) const {
  auto it = properties.find(std::string(iri));
  return it == properties.end() ? nullptr : &it->second;
}

bool Schema::IsAnnotation(std::string_view iri) const {
  return annotation_predicates.contains(std::string(iri));
}

std::string Schema::Iri(std::string_view local) const {
  return ns + std::string(local);
}

Schema BuiltinSchema(std::string_view ns) {
  Schema schema;
  schema.ns = std::string(ns);
  for (const ClassSpec& c : kClasses) {
    std::string iri = schema.Iri(c.local);
    schema.classes.emplace(iri,
                           ClassDef{iri, std::string(c.label), c.ontology});
  }
  for (const PairSpec& pair : kPairs) {
    PropertyDef forward{schema.Iri(pair.local),
                        std::string(pair.label),
                        PropertyKind::kObject,
                        schema.Iri(pair.domain),
                        schema.Iri(pair.range),
                        schema.Iri(pair.inverse_local),
                        pair.transitive};
    PropertyDef inverse{schema.Iri(pair.inverse_local),
                        std::string(pair.inverse_label),
                        PropertyKind::kObject,
                        schema.Iri(pair.range),
                        schema.Iri(pair.domain),
                        schema.Iri(pair.local),
                        false};
    schema.properties.emplace(forward.iri, std::move(forward));
    schema.properties.emplace(inverse.iri, std::move(inverse));
  }
  schema.annotation_predicates = {
      std::string(vocab::kRdfsLabel),
      std::string(vocab::kRdfsComment),
      schema.Iri("formulaLatex"),
      schema.Iri("externalId"),
  };
  return schema;
}

void CheckSchema(const Schema& schema) {
  for (const auto& [iri, p] : schema.properties) {
    if (schema.FindClass(p.domain) == nullptr) {
      throw SchemaError(SchemaErrorKind::kDanglingDomainRange, iri,
                        "domain <" + p.domain + "> is not a declared class");
    }
    if (p.kind == PropertyKind::kObject) {
      if (schema.FindClass(p.range) == nullptr) {
        throw SchemaError(SchemaErrorKind::kDanglingDomainRange, iri,
                          "range <" + p.range + "> is not a declared class");
      }
    } else if (p.range.empty()) {
      throw SchemaError(SchemaErrorKind::kDanglingDomainRange, iri,
                        "datatype property without a range");
    }
    if (p.transitive && p.domain != p.range) {
      throw SchemaError(SchemaErrorKind::kTransitiveDomainRange, iri,
                        "transitive property must have domain = range");
    }
    if (p.inverse_of) {
      const PropertyDef* q = schema.FindProperty(*p.inverse_of);
      if (q == nullptr || p.kind != PropertyKind::kObject ||
          q->kind != PropertyKind::kObject) {
        throw SchemaError(SchemaErrorKind::kAsymmetricInverse, iri,
                          "inverse <" + *p.inverse_of +
                              "> is not a declared object property");
      }
      if (q->inverse_of != iri) {
        throw SchemaError(SchemaErrorKind::kAsymmetricInverse, iri,
                          "inverse <" + q->iri +
                              "> does not declare this property as its inverse");
      }
      if (q->domain != p.range || q->range != p.domain) {
        throw SchemaError(SchemaErrorKind::kAsymmetricInverse, iri,
                          "inverse <" + q->iri +
                              "> does not swap domain and range");
      }
    }
  }
  for (const std::string& a : schema.annotation_predicates) {
    if (schema.classes.contains(a) || schema.properties.contains(a)) {
      throw SchemaError(SchemaErrorKind::kDuplicateIri, a,
                        "declared as annotation and as class or property");
    }
  }
  for (const auto& [iri, c] : schema.classes) {
    if (schema.properties.contains(iri)) {
      throw SchemaError(SchemaErrorKind::kDuplicateIri, iri,
                        "declared as both class and property");
    }
  }
}

bool DeclaresSchema(const ParsedDocument& doc) {
  static const std::array<std::string, 5> kDeclarations = {
      Owl("Class"), Owl("ObjectProperty"), Owl("DatatypeProperty"),
      Owl("AnnotationProperty"), Owl("TransitiveProperty")};
  for (const Triple& t : doc.triples) {
    if (t.predicate.value != vocab::kRdfType || !t.object.is_iri()) continue;
    for (const std::string& d : kDeclarations) {
      if (t.object.value == d) return true;
    }
  }
  return false;
}

Schema SchemaFromTriples(const ParsedDocument& doc) {
  Schema schema;
  if (auto it = doc.prefixes.find("mmo"); it != doc.prefixes.end()) {
    schema.ns = it->second;
  }

  const std::string type = std::string(vocab::kRdfType);
  const std::string owl_class = Owl("Class");
  const std::string object_property = Owl("ObjectProperty");
  const std::string datatype_property = Owl("DatatypeProperty");
  const std::string annotation_property = Owl("AnnotationProperty");
  const std::string transitive_property = Owl("TransitiveProperty");
  const std::string domain = Rdfs("domain");
  const std::string range = Rdfs("range");
  const std::string defined_by = Rdfs("isDefinedBy");
  const std::string inverse_of = Owl("inverseOf");

  // Declaration category per IRI; a second, different category is an error.
  std::map<std::string, std::string> category;
  auto declare = [&](const std::string& iri, const std::string& what) {
    auto [it, inserted] = category.emplace(iri, what);
    if (!inserted && it->second != what) {
      throw SchemaError(SchemaErrorKind::kDuplicateIri, iri,
                        "declared as both " + it->second + " and " + what);
    }
  };

  for (const Triple& t : doc.triples) {
    if (t.predicate.value != type || !t.object.is_iri()) continue;
    const std::string& s = t.subject.value;
    const std::string& o = t.object.value;
    if (o == owl_class) {
      declare(s, "class");
      schema.classes.emplace(s, ClassDef{s, {}, Ontology::kMathModDB});
    } else if (o == object_property || o == transitive_property) {
      declare(s, "object property");
      auto& p = schema.properties[s];
      p.iri = s;
      p.kind = PropertyKind::kObject;
      if (o == transitive_property) p.transitive = true;
    } else if (o == datatype_property) {
      declare(s, "datatype property");
      auto& p = schema.properties[s];
      p.iri = s;
      p.kind = PropertyKind::kDatatype;
    } else if (o == annotation_property) {
      declare(s, "annotation property");
      schema.annotation_predicates.insert(s);
    }
  }

  for (const Triple& t : doc.triples) {
    const std::string& s = t.subject.value;
    const std::string& p = t.predicate.value;
    if (auto c = schema.classes.find(s); c != schema.classes.end()) {
      if (p == vocab::kRdfsLabel && t.object.is_literal() &&
          c->second.label.empty()) {
        c->second.label = t.object.value;
      } else if (p == defined_by && t.object.is_iri()) {
        if (t.object.value == schema.Iri("AlgoData")) {
          c->second.ontology = Ontology::kAlgoData;
        } else if (t.object.value == schema.Iri("MathModDB")) {
          c->second.ontology = Ontology::kMathModDB;
        }
      }
      continue;
    }
    auto prop = schema.properties.find(s);
    if (prop == schema.properties.end()) continue;
    PropertyDef& def = prop->second;
    if (p == vocab::kRdfsLabel && t.object.is_literal() && def.label.empty()) {
      def.label = t.object.value;
    } else if (p == domain && t.object.is_iri() && def.domain.empty()) {
      def.domain = t.object.value;
    } else if (p == range && t.object.is_iri() && def.range.empty()) {
      def.range = t.object.value;
    } else if (p == inverse_of && t.object.is_iri() && !def.inverse_of) {
      def.inverse_of = t.object.value;
    }
  }

  CheckSchema(schema);
  return schema;
}

std::vector<Triple> SchemaToTriples(const Schema& schema) {
  const std::string type = std::string(vocab::kRdfType);
  const std::string label = std::string(vocab::kRdfsLabel);
  std::vector<Triple> out;
  auto add = [&](const std::string& s, const std::string& p,
                 const std::string& o) { out.push_back(MakeTriple(s, p, o)); };

  for (const auto& [iri, c] : schema.classes) {
    add(iri, type, Owl("Class"));
    if (!c.label.empty()) out.push_back(MakeLiteralTriple(iri, label, c.label));
    add(iri, Rdfs("isDefinedBy"), schema.Iri(ToString(c.ontology)));
  }
  for (const auto& [iri, p] : schema.properties) {
    add(iri, type,
        p.kind == PropertyKind::kObject ? Owl("ObjectProperty")
                                        : Owl("DatatypeProperty"));
    if (p.transitive) add(iri, type, Owl("TransitiveProperty"));
    if (!p.label.empty()) out.push_back(MakeLiteralTriple(iri, label, p.label));
    add(iri, Rdfs("domain"), p.domain);
    add(iri, Rdfs("range"), p.range);
    if (p.inverse_of) add(iri, Owl("inverseOf"), *p.inverse_of);
  }
  for (const std::string& a : schema.annotation_predicates) {
    add(a, type, Owl("AnnotationProperty"));
  }
  return out;
}

std::string SerializeSchema(const Schema& schema) {
  PrefixMap prefixes = StandardPrefixes();
  prefixes["mmo"] = schema.ns;
  return SerializeTurtle(GraphSnapshot(SchemaToTriples(schema), prefixes));
}

}  // namespace msokg
