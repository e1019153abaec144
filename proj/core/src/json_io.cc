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

#include "msokg/json_io.h"

#include <array>
#include <tuple>
#include <utility>

namespace msokg {

namespace {

constexpr std::array<std::tuple<ApiErrorCode, std::string_view, int>, 5>
    kCodes = {{
        {ApiErrorCode::kNotFound, "NOT_FOUND", 404},
        {ApiErrorCode::kInvalidQuery, "INVALID_QUERY", 400},
        {ApiErrorCode::kParseError, "PARSE_ERROR", 400},
        {ApiErrorCode::kInvalidParam, "INVALID_PARAM", 400},
        {ApiErrorCode::kInternal, "INTERNAL", 500},
    }};

}  // namespace

std::string_view ToString(ApiErrorCode code) {
  for (const auto& [c, name, status] : kCodes) {
    if (c == code) return name;
  }
  return "INTERNAL";
}

int HttpStatus(ApiErrorCode code) {
  for (const auto& [c, name, status] : kCodes) {
    if (c == code) return status;
  }
  return 500;
}

std::optional<ApiErrorCode> ParseApiErrorCode(std::string_view name) {
  for (const auto& [c, n, status] : kCodes) {
    if (n == name) return c;
  }
  return std::nullopt;
}

Json ToJson(const ApiError& e) {
  Json j;
  j["httpStatus"] = e.http_status();
  j["code"] = ToString(e.code);
  j["message"] = e.message;
  if (!e.detail.is_null()) j["detail"] = e.detail;
  return j;
}

bool IsWellFormedApiError(const Json& j) {
  if (!j.is_object()) return false;
  for (const auto& [key, value] : j.items()) {
    if (key != "httpStatus" && key != "code" && key != "message" &&
        key != "detail") {
      return false;
    }
  }
  if (!j.contains("httpStatus") || !j["httpStatus"].is_number_integer()) {
    return false;
  }
  if (!j.contains("code") || !j["code"].is_string()) return false;
  if (!j.contains("message") || !j["message"].is_string()) return false;
  auto code = ParseApiErrorCode(j["code"].get<std::string>());
  return code && HttpStatus(*code) == j["httpStatus"].get<int>();
}

Json IriJson(std::string_view iri, const PrefixMap& prefixes) {
  Json j;
  j["type"] = "iri";
  j["value"] = iri;
  std::string curie = CompactIri(iri, prefixes);
  if (!curie.empty()) j["curie"] = curie;
  return j;
}

Json ToJson(const Term& t, const PrefixMap& prefixes) {
  if (t.is_iri()) return IriJson(t.value, prefixes);
  Json j;
  j["type"] = "literal";
  j["value"] = t.value;
  if (!t.lang.empty()) j["lang"] = t.lang;
  if (!t.datatype.empty()) j["datatype"] = t.datatype;
  return j;
}

Json ToJson(const Triple& t, const PrefixMap& prefixes) {
  Json j;
  j["s"] = ToJson(t.subject, prefixes);
  j["p"] = ToJson(t.predicate, prefixes);
  j["o"] = ToJson(t.object, prefixes);
  return j;
}

Json ToJson(const EntityRecord& r, const PrefixMap& prefixes) {
  Json j = IriJson(r.iri, prefixes);
  j.erase("type");
  j["types"] = Json::array();
  for (const std::string& t : r.types) j["types"].push_back(IriJson(t, prefixes));
  j["label"] = r.label ? Json(*r.label) : Json();
  j["description"] = r.description ? Json(*r.description) : Json();
  j["attributes"] = Json::array();
  for (const auto& [p, value] : r.literal_attributes) {
    j["attributes"].push_back(
        {{"predicate", IriJson(p, prefixes)}, {"value", ToJson(value, prefixes)}});
  }
  j["outgoing"] = Json::array();
  for (const auto& [p, target] : r.outgoing) {
    j["outgoing"].push_back(
        {{"predicate", IriJson(p, prefixes)}, {"target", IriJson(target, prefixes)}});
  }
  j["incoming"] = Json::array();
  for (const auto& [p, source] : r.incoming) {
    j["incoming"].push_back(
        {{"predicate", IriJson(p, prefixes)}, {"source", IriJson(source, prefixes)}});
  }
  return j;
}

Json ToJson(const Chain& c, const PrefixMap& prefixes) {
  Json j;
  j["steps"] = Json::array();
  for (const ChainStep& s : c.steps) {
    j["steps"].push_back({{"entity", IriJson(s.entity, prefixes)},
                          {"class", IriJson(s.class_iri, prefixes)}});
  }
  j["edges"] = Json::array();
  for (const std::string& e : c.edges) j["edges"].push_back(IriJson(e, prefixes));
  j["complete"] = c.complete;
  j["text"] = FormatChain(c, prefixes);
  return j;
}

Json ToJson(const std::vector<Chain>& chains, const PrefixMap& prefixes) {
  Json j = Json::array();
  for (const Chain& c : chains) j.push_back(ToJson(c, prefixes));
  return j;
}

Json ToJson(const BindingTable& t, const PrefixMap& prefixes) {
  Json j;
  j["variables"] = t.variables;
  j["rows"] = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const Term& term : row) r.push_back(ToJson(term, prefixes));
    j["rows"].push_back(std::move(r));
  }
  j["rowCount"] = t.rows.size();
  return j;
}

Json ToJson(const ValidationReport& r, const PrefixMap& prefixes) {
  Json j;
  j["ok"] = r.ok();
  j["errorCount"] = r.error_count;
  j["warningCount"] = r.warning_count;
  j["violations"] = Json::array();
  for (const Violation& v : r.violations) {
    j["violations"].push_back(
        {{"severity", v.severity == Severity::kError ? "error" : "warning"},
         {"kind", ToString(v.kind)},
         {"triple", ToJson(v.triple, prefixes)},
         {"detail", v.detail}});
  }
  return j;
}

Json ToJson(const Schema& s, const PrefixMap& prefixes) {
  Json j;
  j["namespace"] = s.ns;
  j["classes"] = Json::array();
  for (const auto& [iri, c] : s.classes) {
    Json cj = IriJson(iri, prefixes);
    cj.erase("type");
    cj["label"] = c.label;
    cj["ontology"] = ToString(c.ontology);
    j["classes"].push_back(std::move(cj));
  }
  j["properties"] = Json::array();
  for (const auto& [iri, p] : s.properties) {
    Json pj = IriJson(iri, prefixes);
    pj.erase("type");
    pj["label"] = p.label;
    pj["kind"] = p.kind == PropertyKind::kObject ? "object" : "datatype";
    pj["domain"] = IriJson(p.domain, prefixes);
    pj["range"] = IriJson(p.range, prefixes);
    pj["inverseOf"] = p.inverse_of ? IriJson(*p.inverse_of, prefixes) : Json();
    pj["transitive"] = p.transitive;
    j["properties"].push_back(std::move(pj));
  }
  j["annotationPredicates"] = Json::array();
  for (const std::string& a : s.annotation_predicates) {
    j["annotationPredicates"].push_back(IriJson(a, prefixes));
  }
  return j;
}

Json ToJson(const std::vector<SearchHit>& hits, const PrefixMap& prefixes) {
  Json j = Json::array();
  for (const SearchHit& h : hits) {
    Json hj = IriJson(h.iri, prefixes);
    hj.erase("type");
    hj["label"] = h.label;
    hj["matchField"] = ToString(h.match_field);
    hj["rank"] = ToString(h.rank);
    j.push_back(std::move(hj));
  }
  return j;
}

Json ToJson(const Triple& t, const TripleProvenance& p,
            const PrefixMap& prefixes) {
  Json j;
  j["triple"] = ToJson(t, prefixes);
  j["status"] = p.status == ProvenanceStatus::kAsserted ? "asserted" : "inferred";
  j["rule"] = p.rule ? Json(ToString(*p.rule)) : Json();
  j["premises"] = Json::array();
  for (const Triple& premise : p.premises) {
    j["premises"].push_back(ToJson(premise, prefixes));
  }
  return j;
}

Json ToJson(const InferenceStats& s) {
  Json j;
  j["assertedCount"] = s.asserted_count;
  j["inferredCount"] = s.inferred_count;
  j["iterations"] = s.iterations;
  j["ruleCounts"] = Json::object();
  for (const auto& [rule, n] : s.rule_counts) j["ruleCounts"][rule] = n;
  return j;
}

Json NeighborsJson(const std::map<std::string, std::vector<std::string>>& n,
                   const PrefixMap& prefixes) {
  Json j = Json::array();
  for (const auto& [p, ends] : n) {
    Json group;
    group["predicate"] = IriJson(p, prefixes);
    group["entities"] = IriListJson(ends, prefixes);
    j.push_back(std::move(group));
  }
  return j;
}

Json IriListJson(const std::vector<std::string>& iris,
                 const PrefixMap& prefixes) {
  Json j = Json::array();
  for (const std::string& iri : iris) j.push_back(IriJson(iri, prefixes));
  return j;
}

ApiError ToApiError(const QueryParseError& e) {
  ApiError err;
  err.code = ApiErrorCode::kParseError;
  err.message = e.message();
  err.detail = {{"line", e.line()},
                {"column", e.column()},
                {"kind", ToString(e.kind())}};
  return err;
}

Json ToJson(const LoadError& e, const PrefixMap& prefixes) {
  Json j;
  j["kind"] = ToString(e.kind());
  j["path"] = e.path();
  j["message"] = e.what();
  if (e.position) {
    j["line"] = e.position->line;
    j["column"] = e.position->column;
  }
  if (e.report) j["report"] = ToJson(*e.report, prefixes);
  return j;
}

}  // namespace msokg
