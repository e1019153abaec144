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

// JSON shapes shared by the HTTP service and `kg --json`.

#ifndef MSOKG_JSON_IO_H_
#define MSOKG_JSON_IO_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "msokg/dataset.h"
#include "msokg/query.h"
#include "msokg/reasoner.h"
#include "msokg/schema.h"
#include "msokg/store.h"
#include "msokg/traversal.h"
#include "msokg/validator.h"

namespace msokg {

using Json = nlohmann::ordered_json;

enum class ApiErrorCode {
  kNotFound,
  kInvalidQuery,
  kParseError,
  kInvalidParam,
  kInternal,
};

std::string_view ToString(ApiErrorCode code);
int HttpStatus(ApiErrorCode code);
std::optional<ApiErrorCode> ParseApiErrorCode(std::string_view name);

struct ApiError {
  ApiErrorCode code = ApiErrorCode::kInternal;
  std::string message;
  Json detail;  // null when absent

  int http_status() const { return HttpStatus(code); }
};

Json ToJson(const ApiError& e);

// {"type":"iri","value":...,"curie":...} or
// {"type":"literal","value":...,"lang"?:...,"datatype"?:...}.
Json ToJson(const Term& t, const PrefixMap& prefixes);
Json IriJson(std::string_view iri, const PrefixMap& prefixes);
Json ToJson(const Triple& t, const PrefixMap& prefixes);

Json ToJson(const EntityRecord& r, const PrefixMap& prefixes);
Json ToJson(const Chain& c, const PrefixMap& prefixes);
Json ToJson(const std::vector<Chain>& chains, const PrefixMap& prefixes);
Json ToJson(const BindingTable& t, const PrefixMap& prefixes);
Json ToJson(const ValidationReport& r, const PrefixMap& prefixes);
Json ToJson(const Schema& s, const PrefixMap& prefixes);
Json ToJson(const std::vector<SearchHit>& hits, const PrefixMap& prefixes);
Json ToJson(const Triple& t, const TripleProvenance& p,
            const PrefixMap& prefixes);
Json ToJson(const InferenceStats& s);
Json NeighborsJson(const std::map<std::string, std::vector<std::string>>& n,
                   const PrefixMap& prefixes);
Json IriListJson(const std::vector<std::string>& iris,
                 const PrefixMap& prefixes);

ApiError ToApiError(const QueryParseError& e);
Json ToJson(const LoadError& e, const PrefixMap& prefixes);

// True iff `j` has exactly the ApiError shape with a known code whose
// status matches.
bool IsWellFormedApiError(const Json& j);

}  // namespace msokg

#endif  // MSOKG_JSON_IO_H_
