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

#include "msokg/query.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace msokg {

std::string_view ToString(QueryErrorKind kind) {
  switch (kind) {
    case QueryErrorKind::kUnexpectedToken: return "UnexpectedToken";
    case QueryErrorKind::kUnknownVariable: return "UnknownVariable";
    case QueryErrorKind::kBadFilter: return "BadFilter";
  }
  return "Unknown";
}

QueryParseError::QueryParseError(QueryErrorKind kind, int line, int column,
                                 std::string message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + std::string(ToString(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

EvaluationError::EvaluationError(EvaluationErrorKind kind, std::string message)
    : std::runtime_error(std::move(message)), kind_(kind) {}

std::vector<std::string> QueryAst::OutputVariables() const {
  if (!projection.empty()) return projection;
  std::vector<std::string> vars;
  auto note = [&](const QueryTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
        vars.push_back(v->name);
      }
    }
  };
  for (const QueryPattern& p : patterns) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  return vars;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class QTok {
  kWord,      // keyword or `a`
  kVariable,  // ?name
  kIriRef,
  kPrefixedName,
  kString,
  kInteger,
  kPunct,  // one of { } ( ) . , = *
  kEnd,
};

struct QToken {
  QTok kind = QTok::kEnd;
  int line = 1;
  int column = 1;
  std::string text;   // word, variable name, IRI, prefix, punctuation
  std::string local;  // prefixed-name local part
  Term literal;
};

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class QueryLexer {
 public:
  explicit QueryLexer(std::string_view text) : text_(text) {}

  std::vector<QToken> Tokenize() {
    std::vector<QToken> out;
    while (true) {
      QToken t = Next();
      out.push_back(t);
      if (t.kind == QTok::kEnd) return out;
    }
  }

 private:
  [[noreturn]] void Fail(int line, int column, std::string msg) {
    throw QueryParseError(QueryErrorKind::kUnexpectedToken, line, column,
                          std::move(msg));
  }

  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }

  QToken Next() {
    while (pos_ < text_.size()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
    QToken tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;

    char c = Peek();
    if (c == '?' || c == '$') {
      Advance();
      while (IsWordChar(Peek()) && Peek() != '-') {
        tok.text.push_back(Peek());
        Advance();
      }
      if (tok.text.empty()) Fail(tok.line, tok.column, "empty variable name");
      tok.kind = QTok::kVariable;
      return tok;
    }
    if (c == '<') {
      Advance();
      while (pos_ < text_.size() && Peek() != '>') {
        if (static_cast<unsigned char>(Peek()) <= 0x20 || Peek() == '<') {
          Fail(line_, column_, "illegal character in IRI");
        }
        tok.text.push_back(Peek());
        Advance();
      }
      if (pos_ >= text_.size() || tok.text.empty()) {
        Fail(tok.line, tok.column, "malformed IRI reference");
      }
      Advance();
      tok.kind = QTok::kIriRef;
      return tok;
    }
    if (c == '"') {
      ReadString(tok);
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(Peek()))) {
        tok.text.push_back(Peek());
        Advance();
      }
      tok.kind = QTok::kInteger;
      return tok;
    }
    if (std::string_view("{}().,=*").find(c) != std::string_view::npos) {
      tok.text = std::string(1, c);
      Advance();
      tok.kind = QTok::kPunct;
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':') {
      ReadName(tok);
      return tok;
    }
    Fail(tok.line, tok.column, std::string("unexpected character '") + c + "'");
  }

  void ReadName(QToken& tok) {
    while (IsWordChar(Peek())) {
      tok.text.push_back(Peek());
      Advance();
    }
    if (Peek() != ':') {
      tok.kind = QTok::kWord;
      return;
    }
    if (!IsValidPrefixLabel(tok.text)) {
      Fail(tok.line, tok.column, "malformed prefix '" + tok.text + "'");
    }
    Advance();
    while (IsWordChar(Peek()) || Peek() == '.') {
      tok.local.push_back(Peek());
      Advance();
    }
    // Give back trailing dots: they separate patterns.
    while (!tok.local.empty() && tok.local.back() == '.') {
      tok.local.pop_back();
      --pos_;
      --column_;
    }
    if (!IsValidLocalName(tok.local)) {
      Fail(tok.line, tok.column, "malformed local name '" + tok.local + "'");
    }
    tok.kind = QTok::kPrefixedName;
  }

  void ReadString(QToken& tok) {
    Advance();
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || Peek() == '\n') {
        Fail(tok.line, tok.column, "unterminated string");
      }
      char c = Peek();
      if (c == '"') break;
      if (c == '\\') {
        Advance();
        switch (Peek()) {
          case '"': value.push_back('"'); break;
          case '\\': value.push_back('\\'); break;
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          case 'r': value.push_back('\r'); break;
          default: Fail(line_, column_, "unsupported escape");
        }
        Advance();
        continue;
      }
      value.push_back(c);
      Advance();
    }
    Advance();
    tok.kind = QTok::kString;
    if (Peek() == '@') {
      Advance();
      std::string lang;
      while (IsWordChar(Peek())) {
        lang.push_back(Peek());
        Advance();
      }
      if (lang.empty()) Fail(line_, column_, "empty language tag");
      tok.literal = Term::Literal(std::move(value), std::move(lang));
      return;
    }
    if (Peek() == '^' && Peek(1) == '^') {
      Advance();
      Advance();
      if (Peek() != '<') Fail(line_, column_, "datatype must be an <IRI>");
      Advance();
      std::string dt;
      while (pos_ < text_.size() && Peek() != '>') {
        dt.push_back(Peek());
        Advance();
      }
      if (pos_ >= text_.size()) Fail(line_, column_, "unterminated datatype");
      Advance();
      tok.literal = Term::Literal(std::move(value), {}, std::move(dt));
      return;
    }
    tok.literal = Term::Literal(std::move(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

class QueryParser {
 public:
  explicit QueryParser(std::string_view text)
      : tokens_(QueryLexer(text).Tokenize()) {}

  QueryAst Parse() {
    QueryAst ast;
    ExpectWord("SELECT");
    if (IsWord("DISTINCT")) {
      ast.distinct = true;
      ++i_;
    }
    std::vector<const QToken*> projected;
    if (IsPunct("*")) {
      ++i_;
    } else {
      while (Cur().kind == QTok::kVariable) {
        projected.push_back(&Cur());
        if (std::find(ast.projection.begin(), ast.projection.end(),
                      Cur().text) == ast.projection.end()) {
          ast.projection.push_back(Cur().text);
        }
        ++i_;
      }
      if (projected.empty()) Unexpected("'*' or a projection variable");
    }
    ExpectWord("WHERE");
    ExpectPunct("{");
    std::vector<std::pair<const QToken*, std::string>> filter_vars;
    bool need_separator = false;
    while (!IsPunct("}")) {
      if (Cur().kind == QTok::kEnd) Unexpected("'}'");
      if (IsWord("FILTER")) {
        ++i_;
        filter_vars.push_back(ParseFilter(ast));
        need_separator = false;
        continue;
      }
      if (need_separator) Unexpected("'.' or '}'");
      ast.patterns.push_back(ParsePattern());
      need_separator = true;
      if (IsPunct(".")) {
        ++i_;
        need_separator = false;
      }
    }
    if (ast.patterns.empty()) Unexpected("at least one triple pattern");
    ++i_;  // '}'

    while (Cur().kind == QTok::kWord) {
      std::string kw = Upper(Cur().text);
      if (kw == "LIMIT" && !ast.limit) {
        ++i_;
        ast.limit = ParseInteger();
      } else if (kw == "OFFSET" && !ast.offset) {
        ++i_;
        ast.offset = ParseInteger();
      } else {
        break;
      }
    }
    if (Cur().kind != QTok::kEnd) Unexpected("end of query");

    std::set<std::string> bound;
    for (const QueryPattern& p : ast.patterns) {
      for (const QueryTerm* t : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* v = std::get_if<Variable>(t)) bound.insert(v->name);
      }
    }
    for (const QToken* v : projected) {
      if (!bound.contains(v->text)) {
        throw QueryParseError(QueryErrorKind::kUnknownVariable, v->line,
                              v->column,
                              "?" + v->text + " does not occur in any pattern");
      }
    }
    for (const auto& [tok, name] : filter_vars) {
      if (!bound.contains(name)) {
        throw QueryParseError(QueryErrorKind::kUnknownVariable, tok->line,
                              tok->column,
                              "?" + name + " does not occur in any pattern");
      }
    }
    return ast;
  }

 private:
  const QToken& Cur() const { return tokens_[i_]; }

  bool IsWord(std::string_view kw) const {
    return Cur().kind == QTok::kWord && Upper(Cur().text) == kw;
  }
  bool IsPunct(std::string_view p) const {
    return Cur().kind == QTok::kPunct && Cur().text == p;
  }

  [[noreturn]] void Fail(QueryErrorKind kind, const QToken& at,
                         std::string msg) const {
    throw QueryParseError(kind, at.line, at.column, std::move(msg));
  }

  [[noreturn]] void Unexpected(std::string_view expected) const {
    std::string found = Cur().kind == QTok::kEnd ? "end of query"
                                                 : "'" + Cur().text + "'";
    Fail(QueryErrorKind::kUnexpectedToken, Cur(),
         "expected " + std::string(expected) + ", found " + found);
  }

  void ExpectWord(std::string_view kw) {
    if (!IsWord(kw)) Unexpected(kw);
    ++i_;
  }
  void ExpectPunct(std::string_view p) {
    if (!IsPunct(p)) Unexpected("'" + std::string(p) + "'");
    ++i_;
  }

  std::size_t ParseInteger() {
    if (Cur().kind != QTok::kInteger) Unexpected("an integer");
    std::size_t value = 0;
    const std::string& s = Cur().text;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc()) {
      Fail(QueryErrorKind::kUnexpectedToken, Cur(), "integer out of range");
    }
    ++i_;
    return value;
  }

  // A constant term: IRI, prefixed name, or literal.
  std::optional<QueryTerm> TryConstant() {
    const QToken& t = Cur();
    switch (t.kind) {
      case QTok::kIriRef: ++i_; return Term::Iri(t.text);
      case QTok::kPrefixedName: ++i_; return PrefixedName{t.text, t.local};
      case QTok::kString: ++i_; return t.literal;
      default: return std::nullopt;
    }
  }

  QueryTerm ParseTerm(bool allow_literal, bool allow_a) {
    const QToken& t = Cur();
    if (t.kind == QTok::kVariable) {
      ++i_;
      return Variable{t.text};
    }
    if (allow_a && t.kind == QTok::kWord && t.text == "a") {
      ++i_;
      return Term::Iri(std::string(vocab::kRdfType));
    }
    if (t.kind == QTok::kString && !allow_literal) {
      Unexpected("a variable or IRI");
    }
    if (auto c = TryConstant()) return *c;
    Unexpected(allow_literal ? "a variable, IRI or literal"
                             : "a variable or IRI");
  }

  QueryPattern ParsePattern() {
    QueryPattern p;
    p.subject = ParseTerm(false, false);
    p.predicate = ParseTerm(false, true);
    p.object = ParseTerm(true, false);
    return p;
  }

  std::pair<const QToken*, std::string> ParseFilter(QueryAst& ast) {
    const QToken& start = Cur();
    bool wrapped = IsPunct("(");
    if (wrapped) ++i_;
    std::pair<const QToken*, std::string> var;
    if (IsWord("CONTAINS")) {
      ++i_;
      if (!IsPunct("(")) Fail(QueryErrorKind::kBadFilter, Cur(), "expected '('");
      ++i_;
      if (Cur().kind != QTok::kVariable) {
        Fail(QueryErrorKind::kBadFilter, Cur(),
             "CONTAINS takes a variable as its first argument");
      }
      var = {&Cur(), Cur().text};
      ++i_;
      if (!IsPunct(",")) Fail(QueryErrorKind::kBadFilter, Cur(), "expected ','");
      ++i_;
      if (Cur().kind != QTok::kString) {
        Fail(QueryErrorKind::kBadFilter, Cur(),
             "CONTAINS takes a string literal as its second argument");
      }
      ast.filters.push_back(ContainsFilter{var.second, Cur().literal.value});
      ++i_;
      if (!IsPunct(")")) Fail(QueryErrorKind::kBadFilter, Cur(), "expected ')'");
      ++i_;
    } else if (wrapped && Cur().kind == QTok::kVariable) {
      var = {&Cur(), Cur().text};
      ++i_;
      if (!IsPunct("=")) {
        Fail(QueryErrorKind::kBadFilter, Cur(), "only '=' comparisons are supported");
      }
      ++i_;
      if (Cur().kind == QTok::kWord && Cur().text == "a") {
        ++i_;
        ast.filters.push_back(
            EqualsFilter{var.second, Term::Iri(std::string(vocab::kRdfType))});
      } else if (auto c = TryConstant()) {
        ast.filters.push_back(EqualsFilter{var.second, *c});
      } else {
        Fail(QueryErrorKind::kBadFilter, Cur(),
             "right-hand side of '=' must be an IRI or literal");
      }
    } else {
      Fail(QueryErrorKind::kBadFilter, wrapped ? Cur() : start,
           "unsupported filter expression");
    }
    if (wrapped) {
      if (!IsPunct(")")) Fail(QueryErrorKind::kBadFilter, Cur(), "expected ')'");
      ++i_;
    }
    return var;
  }

  std::vector<QToken> tokens_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation

Term Resolve(const QueryTerm& t, const PrefixMap& prefixes) {
  if (const auto* term = std::get_if<Term>(&t)) return *term;
  const auto& pn = std::get<PrefixedName>(t);
  auto it = prefixes.find(pn.prefix);
  if (it == prefixes.end()) {
    throw EvaluationError(EvaluationErrorKind::kUnknownPrefix,
                          "unknown prefix '" + pn.prefix + ":'");
  }
  return Term::Iri(it->second + pn.local);
}

// A pattern slot is either a constant or a variable index.
struct Slot {
  std::optional<Term> constant;
  int var = -1;
};

struct CompiledPattern {
  std::array<Slot, 3> slots;
};

class Evaluator {
 public:
  Evaluator(const QueryAst& ast, const GraphSnapshot& snapshot)
      : snapshot_(snapshot) {
    auto slot_of = [&](const QueryTerm& t) {
      Slot s;
      if (const auto* v = std::get_if<Variable>(&t)) {
        s.var = VarIndex(v->name);
      } else {
        s.constant = Resolve(t, snapshot.prefixes());
      }
      return s;
    };
    for (const QueryPattern& p : ast.patterns) {
      patterns_.push_back(
          {{slot_of(p.subject), slot_of(p.predicate), slot_of(p.object)}});
    }
    for (const Filter& f : ast.filters) {
      if (const auto* c = std::get_if<ContainsFilter>(&f)) {
        contains_.emplace_back(VarIndex(c->variable), c->needle);
      } else {
        const auto& e = std::get<EqualsFilter>(f);
        equals_.emplace_back(VarIndex(e.variable),
                             Resolve(e.value, snapshot.prefixes()));
      }
    }
    for (const std::string& v : ast.OutputVariables()) {
      output_.push_back(VarIndex(v));
    }
    Reorder();
  }

  std::vector<std::vector<Term>> Run() {
    binding_.assign(var_names_.size(), std::nullopt);
    Search(0);
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
    return std::move(rows_);
  }

 private:
  int VarIndex(const std::string& name) {
    auto it = std::find(var_names_.begin(), var_names_.end(), name);
    if (it != var_names_.end()) return static_cast<int>(it - var_names_.begin());
    var_names_.push_back(name);
    return static_cast<int>(var_names_.size() - 1);
  }

  // Greedy static order: fewest variables not yet bound by earlier patterns,
  // then the smallest match count for the constant positions.
  void Reorder() {
    std::vector<std::size_t> estimate;
    for (const CompiledPattern& p : patterns_) {
      TriplePattern tp{p.slots[0].constant, p.slots[1].constant,
                       p.slots[2].constant};
      estimate.push_back(snapshot_.Count(tp));
    }
    std::vector<bool> used(patterns_.size(), false);
    std::vector<bool> bound(var_names_.size(), false);
    std::vector<CompiledPattern> ordered;
    for (std::size_t n = 0; n < patterns_.size(); ++n) {
      std::size_t best = patterns_.size();
      int best_unbound = 0;
      for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (used[i]) continue;
        int unbound = 0;
        std::set<int> seen;
        for (const Slot& s : patterns_[i].slots) {
          if (s.var >= 0 && !bound[s.var] && seen.insert(s.var).second) {
            ++unbound;
          }
        }
        if (best == patterns_.size() || unbound < best_unbound ||
            (unbound == best_unbound && estimate[i] < estimate[best])) {
          best = i;
          best_unbound = unbound;
        }
      }
      used[best] = true;
      for (const Slot& s : patterns_[best].slots) {
        if (s.var >= 0) bound[s.var] = true;
      }
      ordered.push_back(patterns_[best]);
    }
    patterns_ = std::move(ordered);
  }

  void Search(std::size_t depth) {
    if (depth == patterns_.size()) {
      Emit();
      return;
    }
    const CompiledPattern& p = patterns_[depth];
    std::array<std::optional<Term>, 3> key;
    for (int i = 0; i < 3; ++i) {
      const Slot& s = p.slots[i];
      key[i] = s.var >= 0 ? binding_[s.var] : s.constant;
    }
    // Subjects and predicates are always IRIs in the store.
    if ((key[0] && key[0]->is_literal()) || (key[1] && key[1]->is_literal())) {
      return;
    }
    for (const Triple& t : snapshot_.Match({key[0], key[1], key[2]})) {
      const std::array<const Term*, 3> values = {&t.subject, &t.predicate,
                                                 &t.object};
      std::vector<int> newly_bound;
      bool consistent = true;
      for (int i = 0; i < 3 && consistent; ++i) {
        int v = p.slots[i].var;
        if (v < 0) continue;
        if (binding_[v]) {
          consistent = *binding_[v] == *values[i];
        } else {
          binding_[v] = *values[i];
          newly_bound.push_back(v);
        }
      }
      if (consistent) Search(depth + 1);
      for (int v : newly_bound) binding_[v].reset();
    }
  }

  void Emit() {
    for (const auto& [var, needle] : contains_) {
      if (binding_[var]->value.find(needle) == std::string::npos) return;
    }
    for (const auto& [var, term] : equals_) {
      if (*binding_[var] != term) return;
    }
    std::vector<Term> row;
    row.reserve(output_.size());
    for (int v : output_) row.push_back(*binding_[v]);
    rows_.push_back(std::move(row));
  }

  const GraphSnapshot& snapshot_;
  std::vector<std::string> var_names_;
  std::vector<CompiledPattern> patterns_;
  std::vector<std::pair<int, std::string>> contains_;
  std::vector<std::pair<int, Term>> equals_;
  std::vector<int> output_;
  std::vector<std::optional<Term>> binding_;
  std::vector<std::vector<Term>> rows_;
};

std::size_t DisplayWidth(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace

QueryAst ParseQuery(std::string_view text) { return QueryParser(text).Parse(); }

BindingTable Evaluate(const QueryAst& ast, const GraphSnapshot& snapshot) {
  BindingTable table;
  table.variables = ast.OutputVariables();
  auto rows = Evaluator(ast, snapshot).Run();
  std::size_t first = std::min(ast.offset.value_or(0), rows.size());
  std::size_t last = rows.size();
  if (ast.limit) last = std::min(last, first + *ast.limit);
  table.rows.assign(std::make_move_iterator(rows.begin() + first),
                    std::make_move_iterator(rows.begin() + last));
  return table;
}

std::string FormatTable(const BindingTable& table, const PrefixMap& prefixes) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  std::vector<std::string> header;
  for (const std::string& v : table.variables) {
    header.push_back("?" + v);
    widths.push_back(DisplayWidth(header.back()));
  }
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(ToDisplay(row[i], prefixes));
      widths[i] = std::max(widths[i], DisplayWidth(line.back()));
    }
    cells.push_back(std::move(line));
  }
  auto render = [&](const std::vector<std::string>& line) {
    std::string out;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out += " | ";
      out += line[i];
      if (i + 1 < line.size()) {
        out.append(widths[i] - DisplayWidth(line[i]), ' ');
      }
    }
    return out + "\n";
  };
  std::string out = render(header);
  std::string rule;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (i > 0) rule += "-+-";
    rule.append(widths[i], '-');
  }
  out += rule + "\n";
  for (const auto& line : cells) out += render(line);
  out += std::to_string(table.rows.size()) +
         (table.rows.size() == 1 ? " row\n" : " rows\n");
  return out;
}

}  // namespace msokg
