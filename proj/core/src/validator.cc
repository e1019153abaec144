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

#include "msokg/validator.h"

#include <map>
#include <set>

namespace msokg {

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownPredicate: return "UnknownPredicate";
    case ViolationKind::kDomainViolation: return "DomainViolation";
    case ViolationKind::kRangeViolation: return "RangeViolation";
    case ViolationKind::kUntypedSubject: return "UntypedSubject";
    case ViolationKind::kLiteralWhereEntityExpected:
      return "LiteralWhereEntityExpected";
    case ViolationKind::kEntityWhereLiteralExpected:
      return "EntityWhereLiteralExpected";
  }
  return "Unknown";
}

Severity SeverityOf(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownPredicate:
    case ViolationKind::kUntypedSubject:
      return Severity::kWarning;
    default:
      return Severity::kError;
  }
}

namespace {

std::string JoinTypes(const std::set<std::string>& types,
                      const PrefixMap& prefixes) {
  std::string out;
  for (const std::string& t : types) {
    if (!out.empty()) out += ", ";
    out += DisplayIri(t, prefixes);
  }
  return out;
}

}  // namespace

ValidationReport Validate(std::span<const Triple> triples,
                          const Schema& schema) {
  // Type assertions are collected up front so a type stated after its first
  // use still counts.
  std::map<std::string, std::set<std::string>> types;
  for (const Triple& t : triples) {
    if (t.predicate.value == vocab::kRdfType && t.object.is_iri()) {
      types[t.subject.value].insert(t.object.value);
    }
  }

  PrefixMap prefixes = StandardPrefixes();
  prefixes["mmo"] = schema.ns;

  ValidationReport report;
  std::set<std::string> reported_untyped;
  auto add = [&](ViolationKind kind, const Triple& t, std::string detail) {
    Severity severity = SeverityOf(kind);
    report.violations.push_back(Violation{severity, kind, t, std::move(detail)});
    if (severity == Severity::kError) {
      ++report.error_count;
    } else {
      ++report.warning_count;
    }
  };

  for (const Triple& t : triples) {
    const std::string& subject = t.subject.value;
    const std::string& predicate = t.predicate.value;
    auto subject_types = types.find(subject);

    if (subject_types == types.end() && reported_untyped.insert(subject).second) {
      add(ViolationKind::kUntypedSubject, t,
          "subject " + DisplayIri(subject, prefixes) + " has no rdf:type");
    }

    if (predicate == vocab::kRdfType) {
      if (t.object.is_literal()) {
        add(ViolationKind::kLiteralWhereEntityExpected, t,
            "rdf:type needs a class IRI");
      }
      continue;
    }
    if (schema.IsAnnotation(predicate)) {
      if (t.object.is_iri()) {
        add(ViolationKind::kEntityWhereLiteralExpected, t,
            DisplayIri(predicate, prefixes) + " is an annotation and takes a literal");
      }
      continue;
    }
    const PropertyDef* prop = schema.FindProperty(predicate);
    if (prop == nullptr) {
      add(ViolationKind::kUnknownPredicate, t,
          "predicate " + DisplayIri(predicate, prefixes) + " is not in the schema");
      continue;
    }

    if (subject_types != types.end() &&
        !subject_types->second.contains(prop->domain)) {
      add(ViolationKind::kDomainViolation, t,
          "domain " + DisplayIri(prop->domain, prefixes) + ", found " +
              JoinTypes(subject_types->second, prefixes));
    }

    if (prop->kind == PropertyKind::kDatatype) {
      if (t.object.is_iri()) {
        add(ViolationKind::kEntityWhereLiteralExpected, t,
            DisplayIri(predicate, prefixes) + " is a datatype property");
      }
      continue;
    }
    if (t.object.is_literal()) {
      add(ViolationKind::kLiteralWhereEntityExpected, t,
          DisplayIri(predicate, prefixes) + " expects an instance of " +
              DisplayIri(prop->range, prefixes));
      continue;
    }
    auto object_types = types.find(t.object.value);
    if (object_types != types.end() &&
        !object_types->second.contains(prop->range)) {
      add(ViolationKind::kRangeViolation, t,
          "range " + DisplayIri(prop->range, prefixes) + ", found " +
              JoinTypes(object_types->second, prefixes));
    }
  }
  return report;
}

std::string FormatReport(const ValidationReport& report,
                         const PrefixMap& prefixes) {
  std::string out;
  for (const Violation& v : report.violations) {
    out += v.severity == Severity::kError ? "ERROR " : "WARN ";
    out += ToString(v.kind);
    out += ' ';
    out += ToDisplay(v.triple.subject, prefixes);
    out += ' ';
    out += ToDisplay(v.triple.predicate, prefixes);
    out += ' ';
    out += ToDisplay(v.triple.object, prefixes);
    out += " — ";
    out += v.detail;
    out += '\n';
  }
  out += std::to_string(report.error_count) + " errors, " +
         std::to_string(report.warning_count) + " warnings\n";
  return out;
}

}  // namespace msokg
