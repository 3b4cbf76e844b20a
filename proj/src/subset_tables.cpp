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

#include "subset_tables.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace laminar::detail {

std::vector<std::uint8_t> dependence_table(
    int n, std::span<const ElementSet> circuits) {
  std::vector<std::uint8_t> dependent(std::size_t{1} << n, 0);
  for (ElementSet c : circuits) dependent[c.bits()] = 1;
  // Superset closure.
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      if ((x & bit) && dependent[x ^ bit]) dependent[x] = 1;
    }
  }
  return dependent;
}

std::vector<std::uint8_t> rank_table(
    int n, const std::vector<std::uint8_t>& dependent) {
  std::vector<std::uint8_t> rank(std::size_t{1} << n, 0);
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    if (!dependent[x]) {
      rank[x] = static_cast<std::uint8_t>(std::popcount(x));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask rest = x; rest; rest &= rest - 1) {
      best = std::max(best, rank[x & ~(rest & -rest)]);
    }
    rank[x] = best;
  }
  return rank;
}

std::vector<ElementSet> minimal_dependent(
    int n, const std::vector<std::uint8_t>& dependent) {
  std::vector<ElementSet> out;
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    if (!dependent[x]) continue;
    bool minimal = true;
    for (Mask rest = x; rest && minimal; rest &= rest - 1) {
      if (dependent[x & ~(rest & -rest)]) minimal = false;
    }
    if (minimal) out.emplace_back(x);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<ElementSet> minimal_members(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> kept;
  for (ElementSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [s](ElementSet k) {
      return k.is_subset_of(s);
    });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return kept;
}

Mask compress(Mask set, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = keep; rest; rest &= rest - 1, ++pos) {
    if (set & rest & -rest) out |= Mask{1} << pos;
  }
  return out;
}

Mask next_same_popcount(Mask x, int n) {
  if (x == 0) return 0;
  const Mask c = x & -x;
  const Mask r = x + c;
  if (r == 0) return 0;
  const Mask next = (((r ^ x) >> 2) / c) | r;
  if (n < 32 && (next >> n) != 0) return 0;
  return next;
}

Relabelled sort_names(std::vector<std::string> names,
                      std::vector<ElementSet> sets) {
  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return identifier_less(names[a], names[b]);
  });
  std::vector<int> new_pos(names.size());
  Relabelled out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_pos[order[k]] = static_cast<int>(k);
    out.names.push_back(names[order[k]]);
  }
  for (ElementSet s : sets) {
    ElementSet mapped;
    for (int i : s) mapped = mapped.with(new_pos[i]);
    out.sets.push_back(mapped);
  }
  return out;
}

std::vector<std::string> fresh_names(const std::vector<std::string>& taken,
                                     const std::vector<std::string>& incoming) {
  std::set<std::string> used(taken.begin(), taken.end());
  used.insert(incoming.begin(), incoming.end());
  std::set<std::string> first(taken.begin(), taken.end());
  std::vector<std::string> out;
  for (const auto& name : incoming) {
    if (!first.contains(name)) {
      out.push_back(name);
      continue;
    }
    std::string candidate = name + "'";
    while (used.contains(candidate)) candidate += "'";
    used.insert(candidate);
    out.push_back(candidate);
  }
  return out;
}

}  // namespace laminar::detail
