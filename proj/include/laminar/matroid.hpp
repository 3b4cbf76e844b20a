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

// Finite matroids given by their complete list of circuits.

#ifndef LAMINAR_MATROID_HPP_
#define LAMINAR_MATROID_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "laminar/element_set.hpp"

namespace laminar {

class ExplicitMatroid {
 public:
  // The empty matroid.
  ExplicitMatroid() = default;

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  // Circuits in lexicographic order.
  std::span<const ElementSet> circuits() const { return circuits_; }
  // Rank of the whole ground set.
  int rank() const { return rank_; }

  // Same ground identifiers and same circuit family.
  friend bool operator==(const ExplicitMatroid&,
                         const ExplicitMatroid&) = default;

  // Trusted constructor for code that derives circuits from an already valid
  // matroid. Sorts the circuit list; does not check the circuit axioms.
  static ExplicitMatroid from_trusted(GroundSet ground,
                                      std::vector<ElementSet> circuits);

 private:
  ExplicitMatroid(GroundSet ground, std::vector<ElementSet> circuits);

  GroundSet ground_;
  std::vector<ElementSet> circuits_;
  int rank_ = 0;
};

// Validates the circuit axioms: nonempty members, antichain, and exhaustive
// strong-enough elimination ((C1 u C2) - e contains a circuit). Throws
// kNotAnAntichain, kEliminationFails, kForeignElement, kTooLarge.
ExplicitMatroid build_matroid(GroundSet ground,
                              std::vector<ElementSet> circuits);
// Convenience overload on identifier lists.
ExplicitMatroid build_matroid(
    const std::vector<std::string>& ground,
    const std::vector<std::vector<std::string>>& circuits);

// Matroid whose independent sets are exactly those accepted by `independent`
// (assumed to be an independence oracle). Circuits are the minimal rejected
// sets, found by one pass over all 2^n subsets.
ExplicitMatroid from_independence_oracle(
    GroundSet ground, const std::function<bool(ElementSet)>& independent);

bool is_independent(const ExplicitMatroid& m, ElementSet x);
// Greedy in identifier order.
int rank(const ExplicitMatroid& m, ElementSet x);
ElementSet closure(const ExplicitMatroid& m, ElementSet x);

ExplicitMatroid dual(const ExplicitMatroid& m);
// M / contract_set \ delete_set. Throws kOverlappingSets, kForeignElement.
ExplicitMatroid minor(const ExplicitMatroid& m, ElementSet delete_set,
                      ElementSet contract_set);
ExplicitMatroid restrict_to(const ExplicitMatroid& m, ElementSet keep);
// Throws kRankZero.
ExplicitMatroid truncate(const ExplicitMatroid& m);

// Renames elements of the second operand that collide with the first by
// appending primes until unique ("x" -> "x'").
ExplicitMatroid direct_sum(const ExplicitMatroid& m1, const ExplicitMatroid& m2);
// Identifies basepoint p2 of m2 with basepoint p1 of m1; the shared element
// keeps m1's identifier. Throws kBadBasepoint when either basepoint is a loop
// or a coloop.
ExplicitMatroid parallel_connection(const ExplicitMatroid& m1,
                                    const ExplicitMatroid& m2, int p1, int p2);
// Parallel connection followed by deletion of the basepoint. Throws
// kBadBasepoint, kTooSmall.
ExplicitMatroid two_sum(const ExplicitMatroid& m1, const ExplicitMatroid& m2,
                        int p1, int p2);
// Removes loops and keeps the lowest identifier of every parallel class.
ExplicitMatroid simplify(const ExplicitMatroid& m);
// `names` must be a bijective relabelling in current position order.
ExplicitMatroid relabel(const ExplicitMatroid& m,
                        const std::vector<std::string>& names);

// Connected components, ordered by lowest member.
std::vector<ElementSet> components(const ExplicitMatroid& m);
bool is_connected(const ExplicitMatroid& m);
// All cyclic flats, ordered by size then lexicographically.
std::vector<ElementSet> cyclic_flats(const ExplicitMatroid& m);
std::vector<ElementSet> loops(const ExplicitMatroid& m);
ElementSet loop_set(const ExplicitMatroid& m);
ElementSet coloop_set(const ExplicitMatroid& m);
bool is_uniform(const ExplicitMatroid& m);

// Element bijection from m1 positions to m2 positions mapping circuits onto
// circuits.
using ElementMap = std::vector<int>;
std::optional<ElementMap> is_isomorphic(const ExplicitMatroid& m1,
                                        const ExplicitMatroid& m2);

struct MinorWitness {
  ElementSet deleted;
  ElementSet contracted;
  // Position of N's element i inside M.
  ElementMap embedding;
};
// Searches M / T \ D with T independent and D coindependent, enumerating T
// then D in increasing bitmask order; returns the first isomorphic minor.
std::optional<MinorWitness> has_minor(const ExplicitMatroid& m,
                                      const ExplicitMatroid& n);

// Exhaustive check of the circuit axioms over an arbitrary circuit list.
// Returns an empty string when valid, else a description of the violation.
std::string circuit_axiom_violation(const GroundSet& ground,
                                    std::span<const ElementSet> circuits);

}  // namespace laminar

#endif  // LAMINAR_MATROID_HPP_
