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

// Class membership tests with checkable certificates.

#ifndef LAMINAR_RECOGNITION_HPP_
#define LAMINAR_RECOGNITION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laminar/matroid.hpp"
#include "laminar/presentation.hpp"

namespace laminar {

struct LaminarVerdict {
  bool is_laminar = false;
  // Set when laminar; reproduces the input circuit-for-circuit.
  std::optional<CanonicalPresentation> presentation;
  // Set when not laminar: intersecting circuits with incomparable closures.
  std::optional<std::pair<ElementSet, ElementSet>> violating_pair;
};

// Only intersecting non-spanning circuit pairs are compared; the first
// violating pair in lexicographic circuit order is reported.
LaminarVerdict is_laminar(const ExplicitMatroid& m);

// True iff the pair are intersecting circuits of `m` whose closures are
// incomparable.
bool is_violating_pair(const ExplicitMatroid& m, ElementSet c1, ElementSet c2);

struct NestedVerdict {
  bool is_nested = false;
  // Cyclic flats, smallest first, when they form a chain.
  std::vector<ElementSet> chain;
  // Two incomparable cyclic flats otherwise.
  std::optional<std::pair<ElementSet, ElementSet>> incomparable;
};
NestedVerdict is_nested(const ExplicitMatroid& m);

// Shape of one connected component for the dual-laminar structure test.
struct ComponentShape {
  enum class Kind { kNested, kTruncatedSum, kNeither };
  ElementSet elements;
  Kind kind = Kind::kNeither;
  // For kTruncatedSum: the two uniform sides, their ranks, and the rank the
  // sum is truncated to.
  ElementSet side1, side2;
  int rank1 = 0, rank2 = 0, truncated_rank = 0;
};

struct DualLaminarVerdict {
  // M and its dual both laminar.
  bool is_dual_laminar = false;
  bool laminar = false;
  bool dual_laminar = false;
  // Every component nested or a truncation of a sum of two uniform matroids
  // of positive rank.
  bool structural = false;
  std::vector<ComponentShape> components;
  std::string reason;
};
DualLaminarVerdict classify_dual_laminar(const ExplicitMatroid& m);
// Structure test for a single connected matroid.
ComponentShape component_shape(const ExplicitMatroid& component);

struct ExcludedMinorHit {
  std::string name;
  ExplicitMatroid minor;
  MinorWitness witness;
};

struct MinorFreeVerdict {
  bool holds = false;
  // First excluded minor found, in the listed order.
  std::optional<ExcludedMinorHit> hit;
};
// No minor in {Y_3, U_{2,4}}.
MinorFreeVerdict classify_binary_laminar(const ExplicitMatroid& m);
// No minor in {U_{2,5}, U_{3,5}, Y_3}.
MinorFreeVerdict classify_ternary_laminar(const ExplicitMatroid& m);
// No minor among the named matroids, searched in order.
MinorFreeVerdict excludes_minors(
    const ExplicitMatroid& m,
    const std::vector<std::pair<std::string, ExplicitMatroid>>& excluded);

struct YrWitness {
  int r = 0;
  MinorWitness witness;
};
// Searches r = 3 .. floor((n+1)/2) for a Y_r minor.
std::optional<YrWitness> excluded_minor_witness(const ExplicitMatroid& m);

struct Classification {
  LaminarVerdict laminar;
  NestedVerdict nested;
  DualLaminarVerdict dual_laminar;
  MinorFreeVerdict binary_laminar;
  MinorFreeVerdict ternary_laminar;
};
Classification classify(const ExplicitMatroid& m);

}  // namespace laminar

#endif  // LAMINAR_RECOGNITION_HPP_
