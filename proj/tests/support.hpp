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

// Brute-force oracles and random generators shared by the test binaries.
// Oracles work from first principles (subset enumeration against an
// independence predicate) and never call the library's derived algorithms.

#ifndef LAMINAR_TESTS_SUPPORT_HPP_
#define LAMINAR_TESTS_SUPPORT_HPP_

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "laminar/constructions.hpp"
#include "laminar/matroid.hpp"
#include "laminar/presentation.hpp"

namespace oracle {

using laminar::ElementSet;
using Indep = std::function<bool(ElementSet)>;

// X independent iff it contains no listed circuit.
Indep from_circuits(const laminar::ExplicitMatroid& m);
// X independent iff |X n A| <= c(A) for every member.
Indep from_presentation(const laminar::LaminarPresentation& p);

int rank(const Indep& indep, ElementSet x);
// All minimal dependent subsets of the first n positions, lexicographic.
std::vector<ElementSet> circuits(int n, const Indep& indep);
ElementSet closure(int n, const Indep& indep, ElementSet x);
// Cyclic flats by definition: closed, and every member lies on a circuit
// inside the set. Sorted by size then lexicographically.
std::vector<ElementSet> cyclic_flats(int n, const Indep& indep);

// Circuits of M \ del / con on the surviving positions, renumbered in order.
std::vector<ElementSet> minor_circuits(const laminar::ExplicitMatroid& m,
                                       ElementSet del, ElementSet con);
std::vector<ElementSet> dual_circuits(const laminar::ExplicitMatroid& m);

// Largest total weight of an independent set.
laminar::Weight max_weight(int n, const Indep& indep,
                           const std::vector<laminar::Weight>& weights);

// Tries every bijection. Only for n <= 8.
bool isomorphic(const laminar::ExplicitMatroid& a,
                const laminar::ExplicitMatroid& b);

bool same_circuits(const laminar::ExplicitMatroid& m,
                   const std::vector<ElementSet>& expected);

}  // namespace oracle

namespace gen {

using Rng = std::mt19937;

std::vector<std::string> letters(int n);

// Random laminar family on a..(n-th letter) with capacities in 0..|A|.
laminar::LaminarPresentation random_presentation(Rng& rng, int n);
// Adds `count` sets that are redundant: either inside a member with a
// capacity no smaller than that member's, or with capacity at least |B|.
laminar::LaminarPresentation inflate(Rng& rng,
                                     const laminar::LaminarPresentation& p,
                                     int count);
// Script over fresh identifiers x1, x2, ... whose result has at most
// `max_n` elements. Without sums the script is a single chain.
laminar::ConstructionScript random_script(Rng& rng, int max_n, bool allow_sum);
// Random compositions of standard matroids (sums, truncations, parallel
// connections, 2-sums, duals, minors) on at most `max_n` elements.
laminar::ExplicitMatroid random_construction(Rng& rng, int max_n);

struct Named {
  std::string name;
  laminar::ExplicitMatroid matroid;
};
// Deterministic corpus of named matroids on at most 8 elements plus
// `random_count` random constructions.
std::vector<Named> corpus(int random_count, unsigned seed);

}  // namespace gen

#endif  // LAMINAR_TESTS_SUPPORT_HPP_
