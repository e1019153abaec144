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

#include "msokg/turtle.h"

#include <cstddef>
#include <optional>
#include <utility>

namespace msokg {

std::string_view ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kUndefinedPrefix: return "UndefinedPrefix";
    case ParseErrorKind::kBadIriRef: return "BadIriRef";
    case ParseErrorKind::kBadLiteral: return "BadLiteral";
    case ParseErrorKind::kUnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::kUnterminatedStatement: return "UnterminatedStatement";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, SourcePos pos, std::string message)
    : std::runtime_error(std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " +
                         std::string(ToString(kind)) + ": " + message),
      kind_(kind),
      pos_(pos),
      message_(std::move(message)) {}

namespace {

enum class Tok {
  kIriRef,
  kPrefixedName,
  kLiteral,
  kA,
  kPrefixDirective,
  kDot,
  kSemicolon,
  kComma,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  SourcePos pos;
  // IRI for kIriRef; prefix label for kPrefixedName.
  std::string text;
  // Local part for kPrefixedName.
  std::string local;
  // Literal for kLiteral. A datatype written as a prefixed name is left in
  // `datatype_name` for the parser to resolve.
  Term literal;
  std::optional<std::pair<std::string, std::string>> datatype_name;
  SourcePos datatype_pos;
};

bool IsNameStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool IsNameChar(char c) {
  return IsNameStart(c) || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

bool IsLocalChar(char c) { return IsNameChar(c) || c == '.'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  SourcePos pos() const { return pos_; }

  Token Next() {
    SkipSpaceAndComments();
    Token tok;
    tok.pos = pos_;
    if (AtEnd()) {
      tok.kind = Tok::kEnd;
      return tok;
    }
    char c = Peek();
    switch (c) {
      case '.':
        Advance();
        tok.kind = Tok::kDot;
        return tok;
      case ';':
        Advance();
        tok.kind = Tok::kSemicolon;
        return tok;
      case ',':
        Advance();
        tok.kind = Tok::kComma;
        return tok;
      case '<':
        tok.kind = Tok::kIriRef;
        tok.text = ReadIriRef();
        return tok;
      case '"':
        tok.kind = Tok::kLiteral;
        ReadLiteral(tok);
        return tok;
      case '@':
        if (text_.substr(offset_).starts_with("@prefix") &&
            !IsNameChar(PeekAt(7))) {
          for (int i = 0; i < 7; ++i) Advance();
          tok.kind = Tok::kPrefixDirective;
          return tok;
        }
        Fail(ParseErrorKind::kUnexpectedToken, tok.pos,
             "unsupported directive");
      default:
        break;
    }
    if (IsNameStart(c) || c == ':') {
      ReadName(tok);
      return tok;
    }
    Fail(ParseErrorKind::kUnexpectedToken, tok.pos,
         std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] static void Fail(ParseErrorKind kind, SourcePos pos,
                                std::string message) {
    throw ParseError(kind, pos, std::move(message));
  }

 private:
  bool AtEnd() const { return offset_ >= text_.size(); }
  char Peek() const { return text_[offset_]; }
  char PeekAt(std::size_t ahead) const {
    return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
  }

  void Advance() {
    char c = text_[offset_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // Columns count code points, not UTF-8 continuation bytes.
      ++pos_.column;
    }
  }

  void SkipSpaceAndComments() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string ReadIriRef() {
    SourcePos start = pos_;
    Advance();  // '<'
    std::string iri;
    while (true) {
      if (AtEnd()) {
        Fail(ParseErrorKind::kBadIriRef, start, "unterminated IRI");
      }
      char c = Peek();
      if (c == '>') break;
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
          c == '{' || c == '}' || c == '|' || c == '^' || c == '`' ||
          c == '\\') {
        Fail(ParseErrorKind::kBadIriRef, pos_,
             "illegal character in IRI reference");
      }
      iri.push_back(c);
      Advance();
    }
    Advance();  // '>'
    if (iri.empty() || iri.find(':') == std::string::npos) {
      Fail(ParseErrorKind::kBadIriRef, start,
           "IRI reference must be absolute: <" + iri + ">");
    }
    return iri;
  }

  void ReadLiteral(Token& tok) {
    SourcePos start = tok.pos;
    Advance();  // opening quote
    if (PeekAt(0) == '"' && PeekAt(1) == '"') {
      Fail(ParseErrorKind::kBadLiteral, start, "long strings are unsupported");
    }
    std::string lexical;
    while (true) {
      if (AtEnd() || Peek() == '\n' || Peek() == '\r') {
        Fail(ParseErrorKind::kBadLiteral, start, "unterminated string");
      }
      char c = Peek();
      if (c == '"') break;
      if (c == '\\') {
        SourcePos esc = pos_;
        Advance();
        if (AtEnd()) Fail(ParseErrorKind::kBadLiteral, esc, "dangling escape");
        switch (Peek()) {
          case '"': lexical.push_back('"'); break;
          case '\\': lexical.push_back('\\'); break;
          case 'n': lexical.push_back('\n'); break;
          case 't': lexical.push_back('\t'); break;
          case 'r': lexical.push_back('\r'); break;
          default:
            Fail(ParseErrorKind::kBadLiteral, esc, "unsupported escape");
        }
        Advance();
        continue;
      }
      lexical.push_back(c);
      Advance();
    }
    Advance();  // closing quote

    if (!AtEnd() && Peek() == '@') {
      SourcePos at = pos_;
      Advance();
      std::string lang;
      while (!AtEnd() && (IsNameStart(Peek()) ||
                          (!lang.empty() && (Peek() == '-' ||
                                             (Peek() >= '0' && Peek() <= '9'))))) {
        lang.push_back(Peek());
        Advance();
      }
      if (lang.empty() || lang.back() == '-') {
        Fail(ParseErrorKind::kBadLiteral, at, "malformed language tag");
      }
      tok.literal = Term::Literal(std::move(lexical), std::move(lang));
      return;
    }
    if (!AtEnd() && Peek() == '^' && PeekAt(1) == '^') {
      Advance();
      Advance();
      Token dt;
      dt.pos = pos_;
      if (!AtEnd() && Peek() == '<') {
        tok.literal = Term::Literal(std::move(lexical), {}, ReadIriRef());
        return;
      }
      if (!AtEnd() && (IsNameStart(Peek()) || Peek() == ':')) {
        ReadName(dt);
        if (dt.kind == Tok::kPrefixedName) {
          tok.literal = Term::Literal(std::move(lexical));
          tok.datatype_name.emplace(std::move(dt.text), std::move(dt.local));
          tok.datatype_pos = dt.pos;
          return;
        }
      }
      Fail(ParseErrorKind::kBadLiteral, dt.pos, "malformed datatype");
    }
    tok.literal = Term::Literal(std::move(lexical));
  }

  void ReadName(Token& tok) {
    std::string prefix;
    while (!AtEnd() && IsNameChar(Peek())) {
      prefix.push_back(Peek());
      Advance();
    }
    if (AtEnd() || Peek() != ':') {
      if (prefix == "a") {
        tok.kind = Tok::kA;
        return;
      }
      Fail(ParseErrorKind::kUnexpectedToken, tok.pos,
           "unexpected bare word '" + prefix + "'");
    }
    if (!IsValidPrefixLabel(prefix)) {
      Fail(ParseErrorKind::kUnexpectedToken, tok.pos,
           "malformed prefix label '" + prefix + "'");
    }
    Advance();  // ':'
    std::size_t begin = offset_;
    std::size_t end = offset_;
    while (end < text_.size() && IsLocalChar(text_[end])) ++end;
    // A trailing '.' terminates the statement rather than the name.
    while (end > begin && text_[end - 1] == '.') --end;
    std::string local(text_.substr(begin, end - begin));
    if (!IsValidLocalName(local)) {
      Fail(ParseErrorKind::kUnexpectedToken, tok.pos,
           "malformed local name '" + local + "'");
    }
    while (offset_ < end) Advance();
    tok.kind = Tok::kPrefixedName;
    tok.text = std::move(prefix);
    tok.local = std::move(local);
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Shift(); }

  ParsedDocument Parse() {
    while (cur_.kind != Tok::kEnd) {
      if (cur_.kind == Tok::kPrefixDirective) {
        ParsePrefix();
      } else {
        ParseStatement();
      }
    }
    return std::move(doc_);
  }

 private:
  void Shift() {
    if (cur_.kind != Tok::kEnd || first_) last_pos_ = cur_.pos;
    first_ = false;
    cur_ = lexer_.Next();
    if (cur_.kind == Tok::kLiteral && cur_.datatype_name) {
      cur_.literal.datatype =
          Resolve(cur_.datatype_name->first, cur_.datatype_name->second,
                  cur_.datatype_pos);
    }
  }

  [[noreturn]] void Unexpected(std::string_view expected) {
    if (cur_.kind == Tok::kEnd) {
      Lexer::Fail(ParseErrorKind::kUnterminatedStatement, last_pos_,
                  "input ended inside a statement");
    }
    Lexer::Fail(ParseErrorKind::kUnexpectedToken, cur_.pos,
                "expected " + std::string(expected));
  }

  std::string Resolve(const std::string& prefix, const std::string& local,
                      SourcePos pos) {
    auto it = doc_.prefixes.find(prefix);
    if (it == doc_.prefixes.end()) {
      Lexer::Fail(ParseErrorKind::kUndefinedPrefix, pos,
                  "undeclared prefix '" + prefix + ":'");
    }
    return it->second + local;
  }

  void ParsePrefix() {
    Shift();
    if (cur_.kind != Tok::kPrefixedName || !cur_.local.empty()) {
      Unexpected("prefix label followed by ':'");
    }
    std::string label = cur_.text;
    Shift();
    if (cur_.kind != Tok::kIriRef) Unexpected("namespace IRI");
    std::string ns = cur_.text;
    Shift();
    if (cur_.kind != Tok::kDot) Unexpected("'.' after @prefix");
    Shift();
    doc_.prefixes[label] = std::move(ns);
  }

  Term ParseIriTerm(std::string_view role) {
    Term t;
    if (cur_.kind == Tok::kIriRef) {
      t = Term::Iri(cur_.text);
    } else if (cur_.kind == Tok::kPrefixedName) {
      t = Term::Iri(Resolve(cur_.text, cur_.local, cur_.pos));
    } else {
      Unexpected(role);
    }
    Shift();
    return t;
  }

  Term ParseVerb() {
    if (cur_.kind == Tok::kA) {
      Shift();
      return Term::Iri(std::string(vocab::kRdfType));
    }
    return ParseIriTerm("predicate");
  }

  Term ParseObject() {
    if (cur_.kind == Tok::kLiteral) {
      Term t = cur_.literal;
      Shift();
      return t;
    }
    return ParseIriTerm("object");
  }

  void ParseStatement() {
    SourcePos start = cur_.pos;
    Term subject = ParseIriTerm("subject");
    while (true) {
      Term predicate = ParseVerb();
      while (true) {
        Term object = ParseObject();
        doc_.triples.push_back(Triple{subject, predicate, std::move(object)});
        doc_.spans.push_back(start);
        if (cur_.kind != Tok::kComma) break;
        Shift();
      }
      if (cur_.kind == Tok::kSemicolon) {
        // Repeated and trailing semicolons are legal.
        while (cur_.kind == Tok::kSemicolon) Shift();
        if (cur_.kind == Tok::kDot) break;
        continue;
      }
      break;
    }
    if (cur_.kind != Tok::kDot) Unexpected("'.', ';' or ','");
    Shift();
  }

  Lexer lexer_;
  Token cur_;
  SourcePos last_pos_;
  bool first_ = true;
  ParsedDocument doc_;
};

void AppendObject(std::string& out, const Term& t, const PrefixMap& prefixes) {
  if (t.is_iri()) {
    out += DisplayIri(t.value, prefixes);
    return;
  }
  out += ToDisplay(t, prefixes);
}

}  // namespace

ParsedDocument ParseTurtle(std::string_view text) {
  return Parser(text).Parse();
}

std::string SerializeTurtle(const GraphSnapshot& snapshot) {
  const PrefixMap& prefixes = snapshot.prefixes();
  std::string out;
  for (const auto& [label, ns] : prefixes) {
    out += "@prefix " + label + ": <" + ns + "> .\n";
  }

  // Triples are already in (s,p,o) order, which is exactly the grouping the
  // canonical form needs.
  auto triples = snapshot.triples();
  std::size_t i = 0;
  while (i < triples.size()) {
    const Term& subject = triples[i].subject;
    out += '\n';
    out += DisplayIri(subject.value, prefixes);
    bool first_predicate = true;
    while (i < triples.size() && triples[i].subject == subject) {
      const Term& predicate = triples[i].predicate;
      out += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      out += predicate.value == vocab::kRdfType
                 ? std::string("a")
                 : DisplayIri(predicate.value, prefixes);
      bool first_object = true;
      while (i < triples.size() && triples[i].subject == subject &&
             triples[i].predicate == predicate) {
        out += first_object ? " " : " , ";
        first_object = false;
        AppendObject(out, triples[i].object, prefixes);
        ++i;
      }
    }
    out += " .\n";
  }
  return out;
}

}  // namespace msokg
