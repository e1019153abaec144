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

#include "msokg/store.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

namespace msokg {

namespace {

// Components of a triple in index order.
std::array<const Term*, 3> Key(IndexOrder order, const Triple& t) {
  switch (order) {
    case IndexOrder::kSpo: return {&t.subject, &t.predicate, &t.object};
    case IndexOrder::kPos: return {&t.predicate, &t.object, &t.subject};
    case IndexOrder::kOsp: return {&t.object, &t.subject, &t.predicate};
  }
  return {&t.subject, &t.predicate, &t.object};
}

bool KeyLess(IndexOrder order, const Triple& a, const Triple& b) {
  auto ka = Key(order, a);
  auto kb = Key(order, b);
  return std::tie(*ka[0], *ka[1], *ka[2]) < std::tie(*kb[0], *kb[1], *kb[2]);
}

// Three-way comparison of the first `n` index components against `prefix`.
std::strong_ordering ComparePrefix(IndexOrder order, const Triple& t,
                                   const std::array<const Term*, 3>& prefix,
                                   std::size_t n) {
  auto k = Key(order, t);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = *k[i] <=> *prefix[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

bool TripleStore::PosLess::operator()(const Triple* a, const Triple* b) const {
  return KeyLess(IndexOrder::kPos, *a, *b);
}

bool TripleStore::OspLess::operator()(const Triple* a, const Triple* b) const {
  return KeyLess(IndexOrder::kOsp, *a, *b);
}

bool TripleStore::Insert(const Triple& t) {
  CheckTriple(t);
  auto [it, inserted] = spo_.insert(t);
  if (!inserted) return false;
  pos_.insert(&*it);
  osp_.insert(&*it);
  return true;
}

std::vector<Triple> TripleStore::Enumerate(IndexOrder order) const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  switch (order) {
    case IndexOrder::kSpo:
      out.assign(spo_.begin(), spo_.end());
      break;
    case IndexOrder::kPos:
      for (const Triple* t : pos_) out.push_back(*t);
      break;
    case IndexOrder::kOsp:
      for (const Triple* t : osp_) out.push_back(*t);
      break;
  }
  return out;
}

GraphSnapshot TripleStore::Snapshot(PrefixMap prefixes) const {
  return GraphSnapshot(std::vector<Triple>(spo_.begin(), spo_.end()),
                       std::move(prefixes));
}

GraphSnapshot::GraphSnapshot(std::vector<Triple> triples, PrefixMap prefixes)
    : spo_(std::move(triples)), prefixes_(std::move(prefixes)) {
  for (const Triple& t : spo_) CheckTriple(t);
  std::sort(spo_.begin(), spo_.end());
  spo_.erase(std::unique(spo_.begin(), spo_.end()), spo_.end());

  pos_.resize(spo_.size());
  std::iota(pos_.begin(), pos_.end(), 0u);
  osp_ = pos_;
  std::sort(pos_.begin(), pos_.end(), [this](std::uint32_t a, std::uint32_t b) {
    return KeyLess(IndexOrder::kPos, spo_[a], spo_[b]);
  });
  std::sort(osp_.begin(), osp_.end(), [this](std::uint32_t a, std::uint32_t b) {
    return KeyLess(IndexOrder::kOsp, spo_[a], spo_[b]);
  });
}

const Triple& GraphSnapshot::At(IndexOrder order, std::size_t i) const {
  switch (order) {
    case IndexOrder::kSpo: return spo_[i];
    case IndexOrder::kPos: return spo_[pos_[i]];
    case IndexOrder::kOsp: return spo_[osp_[i]];
  }
  return spo_[i];
}

GraphSnapshot::Range GraphSnapshot::Lookup(const TriplePattern& p) const {
  IndexOrder order = IndexOrder::kSpo;
  std::array<const Term*, 3> prefix{};
  std::size_t n = 0;
  if (p.subject) {
    if (!p.predicate && p.object) {
      order = IndexOrder::kOsp;
      prefix = {&*p.object, &*p.subject, nullptr};
      n = 2;
    } else {
      prefix[n++] = &*p.subject;
      if (p.predicate) {
        prefix[n++] = &*p.predicate;
        if (p.object) prefix[n++] = &*p.object;
      }
    }
  } else if (p.predicate) {
    order = IndexOrder::kPos;
    prefix[n++] = &*p.predicate;
    if (p.object) prefix[n++] = &*p.object;
  } else if (p.object) {
    order = IndexOrder::kOsp;
    prefix[n++] = &*p.object;
  }

  // Binary search over index positions.
  std::size_t lo = 0;
  std::size_t hi = spo_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (ComparePrefix(order, At(order, mid), prefix, n) < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  std::size_t first = lo;
  hi = spo_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (ComparePrefix(order, At(order, mid), prefix, n) <= 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return Range{order, first, lo};
}

bool GraphSnapshot::Contains(const Triple& t) const {
  return std::binary_search(spo_.begin(), spo_.end(), t);
}

std::vector<Triple> GraphSnapshot::Match(const TriplePattern& pattern) const {
  Range r = Lookup(pattern);
  std::vector<Triple> out;
  out.reserve(r.last - r.first);
  for (std::size_t i = r.first; i < r.last; ++i) out.push_back(At(r.order, i));
  if (r.order != IndexOrder::kSpo) std::sort(out.begin(), out.end());
  return out;
}

std::size_t GraphSnapshot::Count(const TriplePattern& pattern) const {
  Range r = Lookup(pattern);
  return r.last - r.first;
}

std::vector<Triple> GraphSnapshot::Enumerate(IndexOrder order) const {
  std::vector<Triple> out;
  out.reserve(spo_.size());
  for (std::size_t i = 0; i < spo_.size(); ++i) out.push_back(At(order, i));
  return out;
}

std::vector<Term> GraphSnapshot::Objects(const Term& subject,
                                         const Term& predicate) const {
  Range r = Lookup({subject, predicate, std::nullopt});
  std::vector<Term> out;
  for (std::size_t i = r.first; i < r.last; ++i) {
    out.push_back(At(r.order, i).object);
  }
  return out;
}

std::vector<Term> GraphSnapshot::Subjects(const Term& predicate,
                                          const Term& object) const {
  Range r = Lookup({std::nullopt, predicate, object});
  std::vector<Term> out;
  for (std::size_t i = r.first; i < r.last; ++i) {
    out.push_back(At(r.order, i).subject);
  }
  return out;
}

std::vector<std::string> GraphSnapshot::SubjectIris() const {
  std::vector<std::string> out;
  for (const Triple& t : spo_) {
    if (out.empty() || out.back() != t.subject.value) {
      out.push_back(t.subject.value);
    }
  }
  return out;
}

bool GraphSnapshot::Mentions(std::string_view iri) const {
  Term term = Term::Iri(std::string(iri));
  return Count({term, std::nullopt, std::nullopt}) > 0 ||
         Count({std::nullopt, term, std::nullopt}) > 0 ||
         Count({std::nullopt, std::nullopt, term}) > 0;
}

bool Matches(const TriplePattern& pattern, const Triple& t) {
  return (!pattern.subject || *pattern.subject == t.subject) &&
         (!pattern.predicate || *pattern.predicate == t.predicate) &&
         (!pattern.object || *pattern.object == t.object);
}

bool InsertTriple(TripleStore& store, const Triple& t) {
  return store.Insert(t);
}

std::vector<Triple> MatchPattern(const GraphSnapshot& snapshot,
                                 const TriplePattern& pattern) {
  return snapshot.Match(pattern);
}

EntityRecord GetEntityRecord(const GraphSnapshot& snapshot,
                             std::string_view iri) {
  EntityRecord record;
  record.iri = std::string(iri);
  Term self = Term::Iri(record.iri);

  for (const Triple& t : snapshot.Match({self, std::nullopt, std::nullopt})) {
    const std::string& p = t.predicate.value;
    if (t.object.is_literal()) {
      if (p == vocab::kRdfsLabel && !record.label) {
        record.label = t.object.value;
      } else if (p == vocab::kRdfsComment && !record.description) {
        record.description = t.object.value;
      }
      record.literal_attributes.emplace_back(p, t.object);
    } else if (p == vocab::kRdfType) {
      record.types.insert(t.object.value);
    } else {
      record.outgoing.emplace_back(p, t.object.value);
    }
  }
  for (const Triple& t : snapshot.Match({std::nullopt, std::nullopt, self})) {
    record.incoming.emplace_back(t.predicate.value, t.subject.value);
  }
  std::sort(record.incoming.begin(), record.incoming.end());
  return record;
}

}  // namespace msokg
