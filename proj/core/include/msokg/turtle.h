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

// Reader and canonical writer for the Turtle subset used by instance data,
// schema files and exports:
//
//   @prefix p: <iri> .
//   subject predicate object (, object)* (; predicate object (, object)*)* .
//
// Terms are <IRIREF>, prefixed names, the keyword `a`, and single-line
// double-quoted literals with an optional @lang tag or ^^datatype. Supported
// escapes are \" \\ \n \t \r. Blank nodes, collections, numeric/boolean
// shorthand and long strings are rejected.

#ifndef MSOKG_TURTLE_H_
#define MSOKG_TURTLE_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msokg/store.h"
#include "msokg/term.h"

namespace msokg {

struct SourcePos {
  int line = 1;
  int column = 1;

  bool operator==(const SourcePos&) const = default;
};

struct ParsedDocument {
  PrefixMap prefixes;
  // Source statement order, duplicates kept.
  std::vector<Triple> triples;
  // Start of the statement each triple came from; parallel to `triples`.
  std::vector<SourcePos> spans;
};

enum class ParseErrorKind {
  kUndefinedPrefix,
  kBadIriRef,
  kBadLiteral,
  kUnexpectedToken,
  kUnterminatedStatement,
};

std::string_view ToString(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourcePos pos, std::string message);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return pos_.line; }
  int column() const { return pos_.column; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

// Parses a whole document. All-or-nothing: throws the first ParseError in
// source order.
ParsedDocument ParseTurtle(std::string_view text);

// Canonical form: prefixes sorted by label, subjects sorted, predicates and
// objects sorted within a subject, `a` for rdf:type, longest-namespace prefix
// compression. A pure function of the triple set and prefix map.
std::string SerializeTurtle(const GraphSnapshot& snapshot);

}  // namespace msokg

#endif  // MSOKG_TURTLE_H_
