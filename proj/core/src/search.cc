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

#include <algorithm>
#include <map>
#include <tuple>

#include "msokg/query.h"

namespace msokg {

std::string_view ToString(MatchField f) {
  return f == MatchField::kLabel ? "label" : "description";
}

std::string_view ToString(MatchRank r) {
  switch (r) {
    case MatchRank::kExact: return "exact";
    case MatchRank::kPrefix: return "prefix";
    case MatchRank::kSubstring: return "substring";
  }
  return "substring";
}

std::string FoldCase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

namespace {

std::string_view Trim(std::string_view s) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<SearchHit> KeywordSearch(const GraphSnapshot& snapshot,
                                     std::string_view query,
                                     std::size_t limit) {
  std::string needle = FoldCase(Trim(query));
  if (needle.empty()) throw InvalidQuery("search query is empty");

  // Best hit per entity; label wins over description at equal rank.
  std::map<std::string, SearchHit> best;
  std::map<std::string, std::string> labels;
  for (const Triple& t : snapshot.triples()) {
    if (!t.object.is_literal()) continue;
    const std::string& p = t.predicate.value;
    bool is_label = p == vocab::kRdfsLabel;
    if (!is_label && p != vocab::kRdfsComment) continue;
    if (is_label) labels.emplace(t.subject.value, t.object.value);

    std::string hay = FoldCase(t.object.value);
    std::size_t at = hay.find(needle);
    if (at == std::string::npos) continue;
    MatchRank rank = hay == needle ? MatchRank::kExact
                     : at == 0     ? MatchRank::kPrefix
                                   : MatchRank::kSubstring;
    SearchHit hit{t.subject.value, {},
                  is_label ? MatchField::kLabel : MatchField::kDescription,
                  rank};
    auto [it, inserted] = best.emplace(t.subject.value, hit);
    if (!inserted) {
      SearchHit& cur = it->second;
      if (std::tie(hit.rank, hit.match_field) <
          std::tie(cur.rank, cur.match_field)) {
        cur = hit;
      }
    }
  }

  std::vector<SearchHit> hits;
  hits.reserve(best.size());
  for (auto& [iri, hit] : best) {
    auto label = labels.find(iri);
    hit.label = label != labels.end() ? label->second : iri;
    hits.push_back(std::move(hit));
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const SearchHit& a, const SearchHit& b) {
                     return std::tie(a.rank, a.iri) < std::tie(b.rank, b.iri);
                   });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

}  // namespace msokg
