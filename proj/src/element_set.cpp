// Copyright 2026 The Authors.
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

#include "laminar/element_set.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "laminar/error.hpp"

namespace laminar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kBadIdentifier: return "BadIdentifier";
    case ErrorKind::kDuplicateElement: return "DuplicateElement";
    case ErrorKind::kForeignElement: return "ForeignElement";
    case ErrorKind::kNotAnAntichain: return "NotAnAntichain";
    case ErrorKind::kEliminationFails: return "EliminationFails";
    case ErrorKind::kOverlappingSets: return "OverlappingSets";
    case ErrorKind::kRankZero: return "RankZero";
    case ErrorKind::kBadBasepoint: return "BadBasepoint";
    case ErrorKind::kTooSmall: return "TooSmall";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kNotLaminar: return "NotLaminar";
    case ErrorKind::kNegativeCapacity: return "NegativeCapacity";
    case ErrorKind::kEmptyMemberSet: return "EmptyMemberSet";
    case ErrorKind::kLoopBase: return "LoopBase";
    case ErrorKind::kNotCanonical: return "NotCanonical";
    case ErrorKind::kNotAChain: return "NotAChain";
    case ErrorKind::kBadParams: return "BadParams";
    case ErrorKind::kUndefinedName: return "UndefinedName";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Error";
}

namespace {

std::atomic<int> g_desk_scale_cap{16};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

int desk_scale_cap() { return g_desk_scale_cap.load(); }

void set_desk_scale_cap(int cap) {
  if (cap < 0 || cap > kMaxGroundSize) {
    throw Error(ErrorKind::kBadParams,
                "size cap must lie in [0," + std::to_string(kMaxGroundSize) +
                    "], got " + std::to_string(cap));
  }
  g_desk_scale_cap.store(cap);
}

void require_desk_scale(int n, std::string_view what) {
  if (n > desk_scale_cap()) {
    throw Error(ErrorKind::kTooLarge,
                std::string(what) + " needs " + std::to_string(n) +
                    " elements; cap is " + std::to_string(desk_scale_cap()));
  }
}

bool identifier_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && is_digit(a[ei])) ++ei;
      while (ej < b.size() && is_digit(b[ej])) ++ej;
      // Compare digit runs numerically, ignoring leading zeros.
      std::size_t zi = i;
      std::size_t zj = j;
      while (zi + 1 < ei && a[zi] == '0') ++zi;
      while (zj + 1 < ej && b[zj] == '0') ++zj;
      std::string_view ra = a.substr(zi, ei - zi);
      std::string_view rb = b.substr(zj, ej - zj);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) {
      return static_cast<unsigned char>(a[i]) <
             static_cast<unsigned char>(b[j]);
    }
    ++i;
    ++j;
  }
  if (i < a.size() || j < b.size()) return j < b.size();
  return a < b;
}

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  });
}

std::vector<int> ElementSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i : *this) out.push_back(i);
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  ElementSet::Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  int i = std::countr_zero(diff);
  ElementSet::Mask above = i >= 31 ? 0 : (~ElementSet::Mask{0} << (i + 1));
  if (a.contains(i)) {
    // a continues with i; b continues with something larger or ends.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

GroundSet::GroundSet(std::vector<std::string> identifiers)
    : names_(std::move(identifiers)) {
  for (const auto& id : names_) {
    if (!is_valid_identifier(id)) {
      throw Error(ErrorKind::kBadIdentifier, "invalid identifier '" + id + "'");
    }
  }
  if (static_cast<int>(names_.size()) > kMaxGroundSize) {
    throw Error(ErrorKind::kTooLarge,
                "ground set of " + std::to_string(names_.size()) +
                    " elements exceeds " + std::to_string(kMaxGroundSize));
  }
  std::sort(names_.begin(), names_.end(), identifier_less);
  auto dup = std::adjacent_find(names_.begin(), names_.end());
  if (dup != names_.end()) {
    throw Error(ErrorKind::kDuplicateElement, "identifier '" + *dup + "'");
  }
}

GroundSet::GroundSet(std::initializer_list<std::string_view> identifiers)
    : GroundSet(std::vector<std::string>(identifiers.begin(),
                                         identifiers.end())) {}

std::optional<int> GroundSet::find(std::string_view id) const {
  auto it = std::lower_bound(
      names_.begin(), names_.end(), id,
      [](const std::string& x, std::string_view y) {
        return identifier_less(x, y);
      });
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int GroundSet::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) {
    throw Error(ErrorKind::kForeignElement,
                "'" + std::string(id) + "' is not in the ground set");
  }
  return *found;
}

ElementSet GroundSet::set_of(std::initializer_list<std::string_view> ids) const {
  ElementSet out;
  for (auto id : ids) out = out.with(index_of(id));
  return out;
}

ElementSet GroundSet::set_of(const std::vector<std::string>& ids) const {
  ElementSet out;
  for (const auto& id : ids) out = out.with(index_of(id));
  return out;
}

std::vector<std::string> GroundSet::names_of(ElementSet set) const {
  std::vector<std::string> out;
  for (int i : set) out.push_back(names_[i]);
  return out;
}

void GroundSet::check_subset(ElementSet set) const {
  if (!set.is_subset_of(all())) {
    throw Error(ErrorKind::kForeignElement,
                "set has positions outside a ground set of size " +
                    std::to_string(size()));
  }
}

std::string GroundSet::format(ElementSet set) const {
  std::string out = "{";
  bool first = true;
  for (int i : set) {
    if (!first) out += ',';
    out += names_[i];
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace laminar
