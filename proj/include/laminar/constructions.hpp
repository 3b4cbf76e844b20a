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

// Named matroids and the empty/coloop/truncate/direct-sum construction
// calculus.

#ifndef LAMINAR_CONSTRUCTIONS_HPP_
#define LAMINAR_CONSTRUCTIONS_HPP_

#include <string>
#include <variant>
#include <vector>

#include "laminar/matroid.hpp"
#include "laminar/presentation.hpp"

namespace laminar {

// Builders name their elements e1, e2, ... unless stated otherwise.
enum class StandardKind { kUniform, kCircuit, kFree, kEmpty, kFano, kFanoDual };

// kUniform takes (r, n); kCircuit and kFree take n in `first`. Throws
// kBadParams.
ExplicitMatroid standard_matroid(StandardKind kind, int first = 0,
                                 int second = 0);
ExplicitMatroid uniform_matroid(int r, int n);
ExplicitMatroid circuit_matroid(int n);
ExplicitMatroid free_matroid(int n);
ExplicitMatroid fano_matroid();
ExplicitMatroid fano_dual_matroid();
// M(K_4) with edges named by their endpoints: 12, 13, 14, 23, 24, 34.
ExplicitMatroid k4_cycle_matroid();

// Truncation to rank r of the parallel connection of two r-element circuits.
// Elements are "p" (the basepoint) and "1" .. "2r-2"; the two circuits are
// {p,1..r-1} and {p,r..2r-2}. Throws kBadParams for r < 3.
ExplicitMatroid build_yr(int r);

using NestedChain = std::vector<ElementSet>;
// Chain members get capacity equal to their 1-based position (repeats keep
// the last position); E minus the top member, when nonempty, is added at
// capacity 0. Throws kNotAChain, kEmptyMemberSet.
LaminarPresentation nested_from_chain(const GroundSet& ground,
                                      const NestedChain& chain);

struct ScriptEmpty {
  friend bool operator==(const ScriptEmpty&, const ScriptEmpty&) = default;
};
struct ScriptColoop {
  std::string source;
  std::string id;
  friend bool operator==(const ScriptColoop&, const ScriptColoop&) = default;
};
struct ScriptTruncate {
  std::string source;
  friend bool operator==(const ScriptTruncate&,
                         const ScriptTruncate&) = default;
};
struct ScriptSum {
  std::string left;
  std::string right;
  friend bool operator==(const ScriptSum&, const ScriptSum&) = default;
};
using ScriptOp = std::variant<ScriptEmpty, ScriptColoop, ScriptTruncate,
                              ScriptSum>;

struct ScriptStep {
  std::string name;
  ScriptOp op;
  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

struct ConstructionScript {
  std::vector<ScriptStep> steps;
  std::string result;

  bool uses_direct_sum() const;
  friend bool operator==(const ConstructionScript&,
                         const ConstructionScript&) = default;
};

// Names are single-assignment; a direct sum consumes both operands. Throws
// kUndefinedName, kBadParams (reassignment), kRankZero, kDuplicateElement.
LaminarPresentation run_script(const ConstructionScript& script);

// A script whose result equals `p`'s matroid on the same identifiers.
ConstructionScript deconstruct(const CanonicalPresentation& p);
// Throws kNotCanonical unless `p` is already canonical.
ConstructionScript deconstruct(const LaminarPresentation& p);

// circuit(n) followed by one parallel extension per plan entry (a position in
// 0..n-1 of the base circuit). Throws kBadParams.
ExplicitMatroid binary_component(int n, const std::vector<int>& plan);
// circuit(n) with a copy of U_{2,4} 2-summed onto each of its first k
// elements. Throws kBadParams.
ExplicitMatroid ternary_component(int n, int k);

}  // namespace laminar

#endif  // LAMINAR_CONSTRUCTIONS_HPP_
