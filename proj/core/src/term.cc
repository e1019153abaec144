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

#include "msokg/term.h"

#include <cctype>

namespace msokg {

namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool IsAsciiAlnum(char c) { return IsAsciiAlpha(c) || (c >= '0' && c <= '9'); }

void AppendEscaped(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

Term Term::Iri(std::string iri) {
  Term t;
  t.kind = TermKind::kIri;
  t.value = std::move(iri);
  return t;
}

Term Term::Literal(std::string lexical, std::string lang,
                   std::string datatype) {
  Term t;
  t.kind = TermKind::kLiteral;
  t.value = std::move(lexical);
  t.lang = std::move(lang);
  t.datatype = std::move(datatype);
  return t;
}

Triple MakeTriple(std::string_view s, std::string_view p, std::string_view o) {
  return Triple{Term::Iri(std::string(s)), Term::Iri(std::string(p)),
                Term::Iri(std::string(o))};
}

Triple MakeLiteralTriple(std::string_view s, std::string_view p,
                         std::string_view lexical) {
  return Triple{Term::Iri(std::string(s)), Term::Iri(std::string(p)),
                Term::Literal(std::string(lexical))};
}

bool IsValidIri(std::string_view iri) {
  if (iri.empty()) return false;
  for (unsigned char c : iri) {
    if (c <= 0x20 || c == '<' || c == '>') return false;
  }
  return true;
}

void CheckTerm(const Term& t) {
  if (t.is_iri()) {
    if (!IsValidIri(t.value)) {
      throw StructuralError("malformed IRI: '" + t.value + "'");
    }
    if (!t.lang.empty() || !t.datatype.empty()) {
      throw StructuralError("IRI term carries literal annotations: " +
                            t.value);
    }
    return;
  }
  if (!t.lang.empty() && !t.datatype.empty()) {
    throw StructuralError("literal has both language tag and datatype");
  }
  if (!t.datatype.empty() && !IsValidIri(t.datatype)) {
    throw StructuralError("malformed datatype IRI: '" + t.datatype + "'");
  }
}

void CheckTriple(const Triple& t) {
  if (!t.subject.is_iri()) throw StructuralError("subject must be an IRI");
  if (!t.predicate.is_iri()) throw StructuralError("predicate must be an IRI");
  CheckTerm(t.subject);
  CheckTerm(t.predicate);
  CheckTerm(t.object);
}

PrefixMap StandardPrefixes() {
  return {
      {"mmo", std::string(vocab::kMso)},   {"owl", std::string(vocab::kOwl)},
      {"rdf", std::string(vocab::kRdf)},   {"rdfs", std::string(vocab::kRdfs)},
      {"xsd", std::string(vocab::kXsd)},
  };
}

bool IsValidLocalName(std::string_view local) {
  if (local.empty()) return true;
  char first = local.front();
  if (!IsAsciiAlnum(first) && first != '_') return false;
  for (char c : local) {
    if (!IsAsciiAlnum(c) && c != '_' && c != '-' && c != '.') return false;
  }
  return local.back() != '.';
}

bool IsValidPrefixLabel(std::string_view label) {
  if (label.empty()) return true;
  if (!IsAsciiAlpha(label.front())) return false;
  for (char c : label) {
    if (!IsAsciiAlnum(c) && c != '_' && c != '-') return false;
  }
  return true;
}

std::string CompactIri(std::string_view iri, const PrefixMap& prefixes) {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : prefixes) {
    const std::string& ns = entry.second;
    if (ns.empty() || !iri.starts_with(ns)) continue;
    if (!IsValidLocalName(iri.substr(ns.size()))) continue;
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
  }
  if (best == nullptr) return {};
  std::string out = best->first;
  out += ':';
  out += iri.substr(best->second.size());
  return out;
}

std::string DisplayIri(std::string_view iri, const PrefixMap& prefixes) {
  std::string curie = CompactIri(iri, prefixes);
  if (!curie.empty()) return curie;
  return "<" + std::string(iri) + ">";
}

std::string ExpandIri(std::string_view text, const PrefixMap& prefixes) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return std::string(text.substr(1, text.size() - 2));
  }
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string prefix(text.substr(0, colon));
    std::string_view local = text.substr(colon + 1);
    auto it = prefixes.find(prefix);
    if (it != prefixes.end() && IsValidLocalName(local)) {
      return it->second + std::string(local);
    }
    if (local.starts_with("//") || prefix == "urn") return std::string(text);
  }
  return {};
}

std::string ToString(const Term& t) {
  std::string out;
  if (t.is_iri()) {
    out += '<';
    out += t.value;
    out += '>';
    return out;
  }
  out += '"';
  AppendEscaped(out, t.value);
  out += '"';
  if (!t.lang.empty()) {
    out += '@';
    out += t.lang;
  } else if (!t.datatype.empty()) {
    out += "^^<";
    out += t.datatype;
    out += '>';
  }
  return out;
}

std::string ToString(const Triple& t) {
  return ToString(t.subject) + " " + ToString(t.predicate) + " " +
         ToString(t.object) + " .";
}

std::string ToDisplay(const Term& t, const PrefixMap& prefixes) {
  if (t.is_iri()) return DisplayIri(t.value, prefixes);
  std::string out = "\"";
  AppendEscaped(out, t.value);
  out += '"';
  if (!t.lang.empty()) {
    out += '@';
    out += t.lang;
  } else if (!t.datatype.empty()) {
    out += "^^";
    out += DisplayIri(t.datatype, prefixes);
  }
  return out;
}

}  // namespace msokg
