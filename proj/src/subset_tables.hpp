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

// Internal helpers: tables indexed by all 2^n subset bitmasks.

#ifndef LAMINAR_SRC_SUBSET_TABLES_HPP_
#define LAMINAR_SRC_SUBSET_TABLES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "laminar/element_set.hpp"

namespace laminar::detail {

using Mask = ElementSet::Mask;

// dependent[X] == 1 iff X contains some listed circuit.
std::vector<std::uint8_t> dependence_table(int n,
                                           std::span<const ElementSet> circuits);
// rank[X] from a dependence table.
std::vector<std::uint8_t> rank_table(int n,
                                     const std::vector<std::uint8_t>& dependent);
// Minimal dependent sets in lexicographic order.
std::vector<ElementSet> minimal_dependent(
    int n, const std::vector<std::uint8_t>& dependent);

// Removes duplicates and non-minimal members; result in lexicographic order.
std::vector<ElementSet> minimal_members(std::vector<ElementSet> sets);

// Packs the bits of `set` that lie in `keep` into consecutive low positions.
Mask compress(Mask set, Mask keep);

// Next mask with the same popcount (Gosper's hack); 0 when exhausted within
// n bits.
Mask next_same_popcount(Mask x, int n);

// Sorts identifiers and remaps masks given in the original positions.
struct Relabelled {
  std::vector<std::string> names;
  std::vector<ElementSet> sets;
};
Relabelled sort_names(std::vector<std::string> names,
                      std::vector<ElementSet> sets);

// Renames `incoming` identifiers that collide with `taken` by appending
// primes; returns the new names in the same order.
std::vector<std::string> fresh_names(const std::vector<std::string>& taken,
                                     const std::vector<std::string>& incoming);

}  // namespace laminar::detail

#endif  // LAMINAR_SRC_SUBSET_TABLES_HPP_
