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

#ifndef MSOKG_TERM_H_
#define MSOKG_TERM_H_

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msokg {

namespace vocab {
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
// Default namespace of the merged models/algorithms ontology, shown as `mmo:`.
inline constexpr std::string_view kMso = "https://example.org/mardi/mso#";

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfsLabel =
    "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view kRdfsComment =
    "http://www.w3.org/2000/01/rdf-schema#comment";
}  // namespace vocab

// Raised when a term or triple violates its structural invariants.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TermKind : std::uint8_t { kIri = 0, kLiteral = 1 };

// An RDF term. Blank nodes are not supported. IRIs order before literals;
// within a kind, terms order by their strings, so every sorted output in the
// engine is reproducible.
struct Term {
  TermKind kind = TermKind::kIri;
  // IRI string, or the literal's lexical form.
  std::string value;
  // At most one of these is non-empty, and only for literals.
  std::string lang;
  std::string datatype;

  static Term Iri(std::string iri);
  static Term Literal(std::string lexical, std::string lang = {},
                      std::string datatype = {});

  bool is_iri() const { return kind == TermKind::kIri; }
  bool is_literal() const { return kind == TermKind::kLiteral; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

// Shorthand for a triple whose object is an IRI.
Triple MakeTriple(std::string_view s, std::string_view p, std::string_view o);
// Shorthand for a triple whose object is a plain literal.
Triple MakeLiteralTriple(std::string_view s, std::string_view p,
                         std::string_view lexical);

// True iff `iri` is non-empty and free of whitespace and angle brackets.
bool IsValidIri(std::string_view iri);

// Throws StructuralError if the term breaks its invariants.
void CheckTerm(const Term& t);
// Throws StructuralError unless subject and predicate are valid IRIs and the
// object is a valid term.
void CheckTriple(const Triple& t);

// Prefix label -> namespace IRI. Ordered so serialization is canonical.
using PrefixMap = std::map<std::string, std::string>;

// Prefixes every loaded graph knows about.
PrefixMap StandardPrefixes();

// CURIE form of `iri` using the longest matching namespace; empty when no
// prefix yields a valid local name.
std::string CompactIri(std::string_view iri, const PrefixMap& prefixes);

// CURIE if one exists, otherwise the IRI wrapped in angle brackets.
std::string DisplayIri(std::string_view iri, const PrefixMap& prefixes);

// Expands "prefix:local" against `prefixes`. Strings that are already
// absolute IRIs (optionally <wrapped>) pass through. Returns an empty string
// when the prefix is unknown.
std::string ExpandIri(std::string_view text, const PrefixMap& prefixes);

// Local-name syntax accepted by the Turtle reader and writer.
bool IsValidLocalName(std::string_view local);
bool IsValidPrefixLabel(std::string_view label);

// N-Triples-like rendering used in diagnostics and text reports.
std::string ToString(const Term& t);
std::string ToString(const Triple& t);
// Same, with IRIs compacted where possible.
std::string ToDisplay(const Term& t, const PrefixMap& prefixes);

}  // namespace msokg

#endif  // MSOKG_TERM_H_
