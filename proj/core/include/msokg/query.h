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

// Structured queries over a snapshot. The accepted language is a small
// SELECT subset of SPARQL:
//
//   SELECT [DISTINCT] (?var+ | *)
//   WHERE { pattern (. pattern)* [.] (FILTER (...))* }
//   [LIMIT n] [OFFSET n]
//
// with filters CONTAINS(?v, "text") and ?v = term. Keywords are
// case-insensitive. Results use set semantics and are sorted.

#ifndef MSOKG_QUERY_H_
#define MSOKG_QUERY_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "msokg/store.h"
#include "msokg/term.h"

namespace msokg {

struct Variable {
  std::string name;  // without the leading '?'
  bool operator==(const Variable&) const = default;
};

// A prefixed name kept unresolved until evaluation.
struct PrefixedName {
  std::string prefix;
  std::string local;
  bool operator==(const PrefixedName&) const = default;
};

using QueryTerm = std::variant<Variable, Term, PrefixedName>;

struct QueryPattern {
  QueryTerm subject;
  QueryTerm predicate;
  QueryTerm object;
  bool operator==(const QueryPattern&) const = default;
};

struct ContainsFilter {
  std::string variable;
  std::string needle;
  bool operator==(const ContainsFilter&) const = default;
};

struct EqualsFilter {
  std::string variable;
  QueryTerm value;  // never a Variable
  bool operator==(const EqualsFilter&) const = default;
};

using Filter = std::variant<ContainsFilter, EqualsFilter>;

struct QueryAst {
  bool distinct = false;
  // Empty means SELECT *.
  std::vector<std::string> projection;
  std::vector<QueryPattern> patterns;
  std::vector<Filter> filters;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> offset;

  // Projected variables, resolving * to every pattern variable in order of
  // first appearance.
  std::vector<std::string> OutputVariables() const;
};

enum class QueryErrorKind { kUnexpectedToken, kUnknownVariable, kBadFilter };

std::string_view ToString(QueryErrorKind kind);

class QueryParseError : public std::runtime_error {
 public:
  QueryParseError(QueryErrorKind kind, int line, int column,
                  std::string message);

  QueryErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  QueryErrorKind kind_;
  int line_;
  int column_;
  std::string message_;
};

enum class EvaluationErrorKind { kUnknownPrefix };

class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(EvaluationErrorKind kind, std::string message);
  EvaluationErrorKind kind() const { return kind_; }

 private:
  EvaluationErrorKind kind_;
};

struct BindingTable {
  std::vector<std::string> variables;
  // Distinct, sorted; row[i] binds variables[i].
  std::vector<std::vector<Term>> rows;

  bool operator==(const BindingTable&) const = default;
};

QueryAst ParseQuery(std::string_view text);

// Set semantics: every total mapping that embeds all patterns in the snapshot
// and satisfies all filters, sorted, then windowed by OFFSET/LIMIT.
BindingTable Evaluate(const QueryAst& ast, const GraphSnapshot& snapshot);

// Aligned text table with CURIE compression, followed by "<n> rows".
std::string FormatTable(const BindingTable& table, const PrefixMap& prefixes);

// Keyword search over label and description literals.
enum class MatchField { kLabel, kDescription };
enum class MatchRank { kExact = 0, kPrefix = 1, kSubstring = 2 };

std::string_view ToString(MatchField f);
std::string_view ToString(MatchRank r);

struct SearchHit {
  std::string iri;
  std::string label;
  MatchField match_field = MatchField::kLabel;
  MatchRank rank = MatchRank::kSubstring;

  bool operator==(const SearchHit&) const = default;
};

class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ASCII case folding; other bytes compare verbatim.
std::string FoldCase(std::string_view s);

// Hits ranked exact > prefix > substring, ties by IRI, truncated to `limit`.
// Throws InvalidQuery when `query` is blank.
std::vector<SearchHit> KeywordSearch(const GraphSnapshot& snapshot,
                                     std::string_view query,
                                     std::size_t limit);

}  // namespace msokg

#endif  // MSOKG_QUERY_H_
