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

#ifndef MSOKG_SCHEMA_H_
#define MSOKG_SCHEMA_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msokg/term.h"
#include "msokg/turtle.h"

namespace msokg {

enum class Ontology { kMathModDB, kAlgoData };

std::string_view ToString(Ontology o);

struct ClassDef {
  std::string iri;
  std::string label;
  Ontology ontology = Ontology::kMathModDB;

  bool operator==(const ClassDef&) const = default;
};

enum class PropertyKind { kObject, kDatatype };

struct PropertyDef {
  std::string iri;
  std::string label;
  PropertyKind kind = PropertyKind::kObject;
  std::string domain;
  // Class IRI for object properties, datatype IRI for datatype properties.
  std::string range;
  std::optional<std::string> inverse_of;
  bool transitive = false;

  bool operator==(const PropertyDef&) const = default;
};

// An ontology: classes, properties, and annotation predicates. Immutable once
// built; classes and properties are keyed by IRI.
struct Schema {
  // Namespace the canonical class and property names live in.
  std::string ns = std::string(vocab::kMso);
  std::map<std::string, ClassDef> classes;
  std::map<std::string, PropertyDef> properties;
  std::set<std::string> annotation_predicates;

  const ClassDef* FindClass(std::string_view iri) const;
  const PropertyDef* FindProperty(std::string_view iri) const;
  bool IsAnnotation(std::string_view iri) const;

  // `ns` + local name.
  std::string Iri(std::string_view local) const;

  bool operator==(const Schema&) const = default;
};

enum class SchemaErrorKind {
  kDanglingDomainRange,
  kAsymmetricInverse,
  kDuplicateIri,
  kTransitiveDomainRange,
};

std::string_view ToString(SchemaErrorKind kind);

class SchemaError : public std::runtime_error {
 public:
  SchemaError(SchemaErrorKind kind, std::string iri, std::string message);

  SchemaErrorKind kind() const { return kind_; }
  const std::string& iri() const { return iri_; }

 private:
  SchemaErrorKind kind_;
  std::string iri_;
};

// The merged models + algorithms ontology: ten classes, fourteen inverse
// property pairs, four annotation predicates.
Schema BuiltinSchema(std::string_view ns = vocab::kMso);

// Interprets owl:Class / owl:ObjectProperty / owl:DatatypeProperty /
// owl:AnnotationProperty declarations together with rdfs:domain, rdfs:range,
// owl:inverseOf, owl:TransitiveProperty and rdfs:isDefinedBy. Throws
// SchemaError when the result breaks a schema invariant.
Schema SchemaFromTriples(const ParsedDocument& doc);

// Throws SchemaError if `schema` breaks an invariant.
void CheckSchema(const Schema& schema);

// True iff the document declares any class or property.
bool DeclaresSchema(const ParsedDocument& doc);

// The schema as triples, inverse of SchemaFromTriples.
std::vector<Triple> SchemaToTriples(const Schema& schema);
// Canonical Turtle for the schema.
std::string SerializeSchema(const Schema& schema);

}  // namespace msokg

#endif  // MSOKG_SCHEMA_H_
