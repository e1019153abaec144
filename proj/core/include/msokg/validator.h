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

#ifndef MSOKG_VALIDATOR_H_
#define MSOKG_VALIDATOR_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msokg/schema.h"
#include "msokg/term.h"

namespace msokg {

enum class Severity { kError, kWarning };

enum class ViolationKind {
  kUnknownPredicate,
  kDomainViolation,
  kRangeViolation,
  kUntypedSubject,
  kLiteralWhereEntityExpected,
  kEntityWhereLiteralExpected,
};

std::string_view ToString(ViolationKind kind);
// Fixed mapping: UnknownPredicate and UntypedSubject warn, the rest are
// errors.
Severity SeverityOf(ViolationKind kind);

struct Violation {
  Severity severity;
  ViolationKind kind;
  Triple triple;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int error_count = 0;
  int warning_count = 0;

  bool ok() const { return error_count == 0; }
  bool operator==(const ValidationReport&) const = default;
};

// Checks asserted (pre-inference) triples against `schema`. Types are only
// read from rdf:type triples in the input, never inferred from domains or
// ranges. Report order follows input order.
ValidationReport Validate(std::span<const Triple> triples,
                          const Schema& schema);

// One line per violation:
//   ERROR|WARN <kind> <subject> <predicate> <object> <sep> <detail>
// where <sep> is U+2014 between single spaces, followed by a summary line
// "<n> errors, <m> warnings".
std::string FormatReport(const ValidationReport& report,
                         const PrefixMap& prefixes);

}  // namespace msokg

#endif  // MSOKG_VALIDATOR_H_
