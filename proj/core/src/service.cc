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

#include "msokg/service.h"

#include <charconv>
#include <map>

#include "httplib.h"
#include "msokg/traversal.h"

namespace msokg {

std::optional<std::string> PercentDecode(std::string_view s) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') {
      out += s[i];
      continue;
    }
    if (i + 2 >= s.size()) return std::nullopt;
    int hi = hex(s[i + 1]);
    int lo = hex(s[i + 2]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

std::string PercentEncode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                      c == '.' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

namespace {

class RequestError {
 public:
  RequestError(ApiErrorCode code, std::string message, Json detail = {})
      : error{code, std::move(message), std::move(detail)} {}
  ApiError error;
};

using Params = std::map<std::string, std::string>;

Params ParseQueryString(std::string_view qs) {
  Params params;
  while (!qs.empty()) {
    std::size_t amp = qs.find('&');
    std::string_view pair = qs.substr(0, amp);
    qs = amp == std::string_view::npos ? std::string_view{} : qs.substr(amp + 1);
    if (pair.empty()) continue;
    std::size_t eq = pair.find('=');
    std::string key(pair.substr(0, eq));
    std::string value(eq == std::string_view::npos ? std::string_view{}
                                                   : pair.substr(eq + 1));
    for (char& c : key) c = c == '+' ? ' ' : c;
    for (char& c : value) c = c == '+' ? ' ' : c;
    auto k = PercentDecode(key);
    auto v = PercentDecode(value);
    if (!k || !v) {
      throw RequestError(ApiErrorCode::kInvalidParam,
                         "malformed percent-encoding in query string");
    }
    params.emplace(std::move(*k), std::move(*v));
  }
  return params;
}

std::optional<std::string> Param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::string RequireParam(const Params& params, const std::string& key) {
  auto v = Param(params, key);
  if (!v || v->empty()) {
    throw RequestError(ApiErrorCode::kInvalidParam,
                       "missing parameter '" + key + "'",
                       Json{{"parameter", key}});
  }
  return *v;
}

std::size_t SizeParam(const Params& params, const std::string& key,
                      std::size_t fallback, std::size_t max) {
  auto v = Param(params, key);
  if (!v) return fallback;
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
  if (ec != std::errc() || end != v->data() + v->size() || v->empty()) {
    throw RequestError(ApiErrorCode::kInvalidParam,
                       "parameter '" + key + "' must be a non-negative integer",
                       Json{{"parameter", key}, {"value", *v}});
  }
  return std::min(n, max);
}

std::string ExpandOrThrow(std::string_view text, const PrefixMap& prefixes,
                          const std::string& what) {
  std::string iri = ExpandIri(text, prefixes);
  if (iri.empty() || !IsValidIri(iri)) {
    throw RequestError(ApiErrorCode::kInvalidParam,
                       "cannot resolve " + what + " '" + std::string(text) + "'",
                       Json{{"value", text}});
  }
  return iri;
}

// "lexical", "lexical"@lang, "lexical"^^<dt> or "lexical"^^prefix:local.
Term LiteralParam(std::string_view text, const PrefixMap& prefixes) {
  std::size_t close = text.rfind('"');
  if (close == 0 || close == std::string_view::npos) {
    throw RequestError(ApiErrorCode::kInvalidParam,
                       "unterminated literal '" + std::string(text) + "'");
  }
  std::string lexical(text.substr(1, close - 1));
  std::string_view rest = text.substr(close + 1);
  if (rest.empty()) return Term::Literal(lexical);
  if (rest.front() == '@' && rest.size() > 1) {
    return Term::Literal(lexical, std::string(rest.substr(1)));
  }
  if (rest.starts_with("^^")) {
    return Term::Literal(lexical, {},
                         ExpandOrThrow(rest.substr(2), prefixes, "datatype"));
  }
  throw RequestError(ApiErrorCode::kInvalidParam,
                     "malformed literal '" + std::string(text) + "'");
}

std::vector<std::string> SplitPath(std::string_view path) {
  std::vector<std::string> segments;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    std::size_t slash = path.find('/');
    auto seg = PercentDecode(path.substr(0, slash));
    if (!seg) {
      throw RequestError(ApiErrorCode::kInvalidParam,
                         "malformed percent-encoding in path");
    }
    segments.push_back(std::move(*seg));
    path = slash == std::string_view::npos ? std::string_view{}
                                           : path.substr(slash + 1);
  }
  return segments;
}

Json EntitySummary(const GraphSnapshot& snap, const std::string& iri) {
  const PrefixMap& pm = snap.prefixes();
  Json j = IriJson(iri, pm);
  j.erase("type");
  auto labels = snap.Objects(Term::Iri(iri), Term::Iri(std::string(vocab::kRdfsLabel)));
  j["label"] = labels.empty() ? Json() : Json(labels.front().value);
  Json types = Json::array();
  for (const Term& t : snap.Objects(Term::Iri(iri),
                                    Term::Iri(std::string(vocab::kRdfType)))) {
    if (t.is_iri()) types.push_back(IriJson(t.value, pm));
  }
  j["types"] = std::move(types);
  return j;
}

class Router {
 public:
  explicit Router(const ServiceState& state)
      : state_(state),
        snap_(state.graph.snapshot()),
        prefixes_(snap_.prefixes()) {}

  HttpResponse Route(const HttpRequest& req) {
    std::string_view target = req.target;
    std::size_t q = target.find('?');
    std::vector<std::string> seg = SplitPath(target.substr(0, q));
    Params params = q == std::string_view::npos
                        ? Params{}
                        : ParseQueryString(target.substr(q + 1));
    bool get = req.method == "GET";

    if (seg.empty() || seg[0] != "api") return NoRoute(req);
    if (seg.size() == 2 && get) {
      if (seg[1] == "health") return Ok(Health());
      if (seg[1] == "schema") return Ok(ToJson(state_.schema, prefixes_));
      if (seg[1] == "search") return Ok(Search(params));
      if (seg[1] == "entities") return Ok(Entities(params));
      if (seg[1] == "competency") return Ok(CompetencyRoute(params));
      if (seg[1] == "explain") return Ok(ExplainRoute(params));
    }
    if (seg.size() == 2 && seg[1] == "query" && req.method == "POST") {
      return Ok(Query(req.body));
    }
    if (seg.size() >= 3 && seg.size() <= 4 && seg[1] == "entities" && get) {
      std::string iri = EntityIri(seg[2]);
      if (seg.size() == 3) return Ok(Entity(iri));
      if (seg[3] == "chains") return Ok(Chains(iri));
      if (seg[3] == "neighbors") return Ok(NeighborsRoute(iri, params));
    }
    return NoRoute(req);
  }

 private:
  static HttpResponse Ok(Json body) { return {200, std::move(body)}; }

  static HttpResponse NoRoute(const HttpRequest& req) {
    throw RequestError(ApiErrorCode::kNotFound,
                       "no route for " + req.method + " " + req.target);
  }

  Json Health() const {
    const InferenceStats& st = state_.graph.stats();
    Json j;
    j["status"] = "ok";
    j["tripleCounts"] = {{"asserted", st.asserted_count},
                         {"inferred", st.inferred_count},
                         {"total", snap_.size()}};
    j["generation"] = state_.generation;
    j["datasetPaths"] = state_.dataset_paths;
    return j;
  }

  Json Search(const Params& params) const {
    std::string q = Param(params, "q").value_or("");
    std::size_t limit = SizeParam(params, "limit", kDefaultPageSize, kMaxPageSize);
    try {
      return ToJson(KeywordSearch(snap_, q, limit), prefixes_);
    } catch (const InvalidQuery& e) {
      throw RequestError(ApiErrorCode::kInvalidQuery, e.what());
    }
  }

  Json Entities(const Params& params) const {
    std::size_t limit = SizeParam(params, "limit", kDefaultPageSize, kMaxPageSize);
    std::size_t offset = SizeParam(params, "offset", 0, SIZE_MAX);
    std::optional<std::string> type;
    if (auto t = Param(params, "type"); t && !t->empty()) {
      type = ExpandOrThrow(*t, prefixes_, "type");
    }
    std::vector<std::string> iris;
    if (type) {
      for (const Term& s : snap_.Subjects(Term::Iri(std::string(vocab::kRdfType)),
                                          Term::Iri(*type))) {
        if (s.is_iri()) iris.push_back(s.value);
      }
    } else {
      iris = snap_.SubjectIris();
    }
    Json j;
    j["total"] = iris.size();
    j["offset"] = offset;
    j["limit"] = limit;
    j["items"] = Json::array();
    for (std::size_t i = offset; i < iris.size() && i - offset < limit; ++i) {
      j["items"].push_back(EntitySummary(snap_, iris[i]));
    }
    return j;
  }

  std::string EntityIri(const std::string& segment) const {
    std::string iri = ExpandIri(segment, prefixes_);
    if (iri.empty() && IsValidIri(segment)) iri = segment;
    if (iri.empty() || !IsValidIri(iri)) {
      throw RequestError(ApiErrorCode::kInvalidParam,
                         "cannot resolve entity '" + segment + "'",
                         Json{{"value", segment}});
    }
    return iri;
  }

  void RequireEntity(const std::string& iri) const {
    if (!snap_.Mentions(iri)) {
      throw RequestError(ApiErrorCode::kNotFound,
                         "no entity " + DisplayIri(iri, prefixes_),
                         Json{{"iri", iri}});
    }
  }

  Json Entity(const std::string& iri) const {
    EntityRecord r = GetEntityRecord(snap_, iri);
    if (r.empty()) {
      throw RequestError(ApiErrorCode::kNotFound,
                         "no entity " + DisplayIri(iri, prefixes_),
                         Json{{"iri", iri}});
    }
    return ToJson(r, prefixes_);
  }

  Json Chains(const std::string& iri) const {
    RequireEntity(iri);
    try {
      return ToJson(MsoChains(snap_, state_.schema, iri), prefixes_);
    } catch (const NotAChainClass& e) {
      throw RequestError(ApiErrorCode::kInvalidParam, e.what(),
                         Json{{"iri", iri}});
    }
  }

  Json NeighborsRoute(const std::string& iri, const Params& params) const {
    RequireEntity(iri);
    std::string name = Param(params, "direction").value_or("both");
    auto dir = ParseDirection(name);
    if (!dir) {
      throw RequestError(ApiErrorCode::kInvalidParam,
                         "direction must be outgoing, incoming or both",
                         Json{{"parameter", "direction"}, {"value", name}});
    }
    Json j = IriJson(iri, prefixes_);
    j.erase("type");
    j["direction"] = name;
    j["neighbors"] = NeighborsJson(Neighbors(snap_, iri, *dir), prefixes_);
    return j;
  }

  Json CompetencyRoute(const Params& params) const {
    std::string kind_name = RequireParam(params, "kind");
    auto kind = ParseCompetencyKind(kind_name);
    if (!kind) {
      throw RequestError(ApiErrorCode::kInvalidParam,
                         "unknown competency kind '" + kind_name + "'",
                         Json{{"parameter", "kind"}, {"value", kind_name}});
    }
    std::string target =
        ExpandOrThrow(RequireParam(params, "target"), prefixes_, "target");
    Json j;
    j["kind"] = kind_name;
    j["target"] = IriJson(target, prefixes_);
    j["results"] =
        IriListJson(Competency(snap_, *kind, target, state_.schema.ns), prefixes_);
    return j;
  }

  Json ExplainRoute(const Params& params) const {
    Triple t;
    t.subject = Term::Iri(ExpandOrThrow(RequireParam(params, "s"), prefixes_, "s"));
    t.predicate =
        Term::Iri(ExpandOrThrow(RequireParam(params, "p"), prefixes_, "p"));
    std::string o = RequireParam(params, "o");
    t.object = o.front() == '"' ? LiteralParam(o, prefixes_)
                                : Term::Iri(ExpandOrThrow(o, prefixes_, "o"));
    try {
      return ToJson(t, state_.graph.Explain(t), prefixes_);
    } catch (const NotInGraph& e) {
      throw RequestError(ApiErrorCode::kNotFound, e.what(),
                         Json{{"triple", ToJson(t, prefixes_)}});
    }
  }

  Json Query(const std::string& body) const {
    Json req = Json::parse(body, nullptr, false);
    if (req.is_discarded() || !req.is_object() || !req.contains("query") ||
        !req["query"].is_string()) {
      throw RequestError(ApiErrorCode::kInvalidParam,
                         "body must be a JSON object with a string 'query'");
    }
    try {
      QueryAst ast = ParseQuery(req["query"].get<std::string>());
      return ToJson(Evaluate(ast, snap_), prefixes_);
    } catch (const QueryParseError& e) {
      ApiError err = ToApiError(e);
      throw RequestError(err.code, err.message, err.detail);
    } catch (const EvaluationError& e) {
      throw RequestError(ApiErrorCode::kInvalidQuery, e.what());
    }
  }

  const ServiceState& state_;
  const GraphSnapshot& snap_;
  const PrefixMap& prefixes_;
};

}  // namespace

struct KgService::Server {
  httplib::Server http;
};

KgService::KgService(LoadedDataset initial,
                     std::vector<std::string> dataset_paths,
                     std::optional<std::string> schema_path)
    : schema_path_(std::move(schema_path)),
      started_at_(std::chrono::system_clock::now()) {
  Publish(std::move(initial), std::move(dataset_paths));
}

KgService::~KgService() { Stop(); }

void KgService::Publish(LoadedDataset loaded, std::vector<std::string> paths) {
  auto next = std::make_shared<ServiceState>();
  next->schema = std::move(loaded.schema);
  next->graph = std::move(loaded.graph);
  next->dataset_paths = std::move(paths);
  next->started_at = started_at_;
  std::lock_guard lock(state_mu_);
  next->generation = state_ ? state_->generation + 1 : 0;
  state_ = std::move(next);
}

InferenceStats KgService::ReloadDataset(const std::vector<std::string>& paths) {
  std::lock_guard reload(reload_mu_);
  LoadedDataset loaded = LoadDataset(paths, schema_path_);
  InferenceStats stats = loaded.graph.stats();
  Publish(std::move(loaded), paths);
  return stats;
}

std::shared_ptr<const ServiceState> KgService::state() const {
  std::lock_guard lock(state_mu_);
  return state_;
}

HttpResponse KgService::Handle(const HttpRequest& request) const {
  std::shared_ptr<const ServiceState> current = state();
  try {
    return Router(*current).Route(request);
  } catch (const RequestError& e) {
    return {e.error.http_status(), ToJson(e.error)};
  } catch (const std::exception& e) {
    ApiError err{ApiErrorCode::kInternal, e.what(), {}};
    return {err.http_status(), ToJson(err)};
  }
}

bool KgService::Serve(const ServeOptions& options, std::ostream& log,
                      std::function<void(int)> on_ready) {
  {
    std::lock_guard lock(server_mu_);
    server_ = std::make_unique<Server>();
  }
  httplib::Server& http = server_->http;
  auto log_mu = std::make_shared<std::mutex>();

  auto handler = [this, &log, log_mu, cors = options.cors_origin](
                     const httplib::Request& req, httplib::Response& res) {
    auto start = std::chrono::steady_clock::now();
    HttpResponse out;
    if (req.method == "OPTIONS") {
      out.status = 204;
    } else {
      out = Handle({req.method, req.target, req.body});
      res.set_content(out.body.dump(), "application/json");
    }
    res.status = out.status;
    res.set_header("Access-Control-Allow-Origin", cors);
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    Json line{{"method", req.method},
              {"path", req.target},
              {"status", out.status},
              {"durationMs", ms}};
    std::lock_guard lock(*log_mu);
    log << line.dump() << '\n' << std::flush;
  };
  http.Get(".*", handler);
  http.Post(".*", handler);
  http.Options(".*", handler);

  int port = options.port;
  if (port == 0) {
    port = http.bind_to_any_port(options.host);
    if (port < 0) return false;
  } else if (!http.bind_to_port(options.host, port)) {
    return false;
  }
  if (on_ready) on_ready(port);
  return http.listen_after_bind();
}

void KgService::Stop() {
  std::lock_guard lock(server_mu_);
  if (server_) server_->http.stop();
}

}  // namespace msokg
