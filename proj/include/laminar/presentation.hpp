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

// Laminar presentations (E, family, capacities) and the matroids they define:
// a set I is independent iff |I n A| <= c(A) for every member A.

#ifndef LAMINAR_PRESENTATION_HPP_
#define LAMINAR_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "laminar/element_set.hpp"
#include "laminar/matroid.hpp"

namespace laminar {

struct CapacitatedSet {
  ElementSet members;
  int capacity = 0;
  friend bool operator==(const CapacitatedSet&, const CapacitatedSet&) = default;
};

// A laminar set family stored as a nesting forest. Members are kept in
// preorder: every parent precedes its children, and siblings (and roots)
// appear in lexicographic order.
class LaminarFamily {
 public:
  LaminarFamily() = default;
  // `sets` must be distinct and nonempty. Throws kNotLaminar naming the
  // lexicographically first crossing pair.
  static LaminarFamily build(const GroundSet& ground,
                             std::vector<ElementSet> sets);

  int size() const { return static_cast<int>(sets_.size()); }
  ElementSet set(int i) const { return sets_[i]; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  // -1 for roots.
  int parent(int i) const { return parent_[i]; }
  const std::vector<int>& children(int i) const { return children_[i]; }
  const std::vector<int>& roots() const { return roots_; }
  // Members of set i lying in none of its children.
  ElementSet free_part(int i) const { return free_part_[i]; }
  // Elements of `universe` lying in no member.
  ElementSet uncovered(ElementSet universe) const;
  std::optional<int> find(ElementSet set) const;

  friend bool operator==(const LaminarFamily& a, const LaminarFamily& b) {
    return a.sets_ == b.sets_;
  }

 private:
  std::vector<ElementSet> sets_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> roots_;
  std::vector<ElementSet> free_part_;
};

class LaminarPresentation {
 public:
  LaminarPresentation() = default;

  const GroundSet& ground() const { return ground_; }
  const LaminarFamily& family() const { return family_; }
  int size() const { return family_.size(); }
  ElementSet set(int i) const { return family_.set(i); }
  int capacity(int i) const { return capacities_[i]; }
  const std::vector<int>& capacities() const { return capacities_; }
  // Members paired with capacities, in family order.
  std::vector<CapacitatedSet> members() const;
  // |S(A)| plus the capacities of A's children.
  int capacity_bound(int i) const;

  friend bool operator==(const LaminarPresentation&,
                         const LaminarPresentation&) = default;

 private:
  friend LaminarPresentation validate_presentation(GroundSet,
                                                   std::vector<CapacitatedSet>);
  GroundSet ground_;
  LaminarFamily family_;
  std::vector<int> capacities_;
};

// Checks laminarity, builds the forest, and collapses duplicate sets to
// their minimum capacity. Throws kNotLaminar, kNegativeCapacity,
// kEmptyMemberSet, kForeignElement.
LaminarPresentation validate_presentation(GroundSet ground,
                                          std::vector<CapacitatedSet> sets);
LaminarPresentation validate_presentation(
    const std::vector<std::string>& ground,
    const std::vector<std::pair<std::vector<std::string>, int>>& sets);

// The unique presentation with only essential members plus the loop set.
class CanonicalPresentation {
 public:
  const LaminarPresentation& presentation() const { return presentation_; }
  const GroundSet& ground() const { return presentation_.ground(); }
  ElementSet loop_set() const { return loop_set_; }
  // A largest circuit whose closure (minus loops) is member i; empty for the
  // loop set.
  ElementSet evidence(int i) const { return evidence_[i]; }

  friend bool operator==(const CanonicalPresentation& a,
                         const CanonicalPresentation& b) {
    return a.presentation_ == b.presentation_ && a.loop_set_ == b.loop_set_;
  }

 private:
  friend std::optional<CanonicalPresentation> canonical_from_matroid(
      const ExplicitMatroid&);
  LaminarPresentation presentation_;
  ElementSet loop_set_;
  std::vector<ElementSet> evidence_;
};

bool lam_is_independent(const LaminarPresentation& p, ElementSet set);
// Tree dynamic program over the nesting forest.
int lam_rank(const LaminarPresentation& p, ElementSet set);
// Throws kTooLarge above the desk-scale cap.
ExplicitMatroid to_explicit(const LaminarPresentation& p);

// Drops members made redundant by a containing member of no larger capacity,
// or by a capacity at least the bound from their children. Preserves the
// matroid.
LaminarPresentation prune_inessential(const LaminarPresentation& p);
// Family = closures of circuits (minus loops) with capacity |C| - 1, plus the
// loop set at capacity 0. Returns nullopt if those closures are not laminar.
// Does not check that the result reproduces `m`.
std::optional<CanonicalPresentation> canonical_from_matroid(
    const ExplicitMatroid& m);
CanonicalPresentation canonicalize(const LaminarPresentation& p);
bool is_canonical(const LaminarPresentation& p);

// Members A for which S(A) contains both coloops and free elements of M|A.
std::vector<int> mixed_free_parts(const CanonicalPresentation& p);

// Minor formulas. Colliding images keep the smaller capacity.
LaminarPresentation lam_delete(const LaminarPresentation& p, int element);
LaminarPresentation lam_contract(const LaminarPresentation& p, int element);
LaminarPresentation lam_direct_sum(const LaminarPresentation& p1,
                                   const LaminarPresentation& p2);
// Throws kRankZero.
LaminarPresentation lam_truncate(const LaminarPresentation& p);
// Throws kDuplicateElement.
LaminarPresentation lam_add_coloop(const LaminarPresentation& p,
                                   const std::string& id);
// Adds `id` parallel to `element`. Throws kLoopBase, kDuplicateElement.
LaminarPresentation lam_parallel_extend(const CanonicalPresentation& p,
                                        int element, const std::string& id);
// Restriction to `keep`; members are intersected with it.
LaminarPresentation lam_restrict(const LaminarPresentation& p, ElementSet keep);

using Weight = boost::rational<long long>;
struct WeightedSelection {
  ElementSet set;
  Weight weight;
};
// Greedy by decreasing weight, ties by identifier order; elements with
// non-positive weight are never taken. `weights` is indexed by position.
WeightedSelection max_weight_independent(const LaminarPresentation& p,
                                         const std::vector<Weight>& weights);

}  // namespace laminar

#endif  // LAMINAR_PRESENTATION_HPP_
