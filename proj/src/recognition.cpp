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

#include "laminar/recognition.hpp"

#include <algorithm>
#include <stdexcept>

#include "laminar/constructions.hpp"
#include "laminar/error.hpp"
#include "subset_tables.hpp"

namespace laminar {

using detail::Mask;

LaminarVerdict is_laminar(const ExplicitMatroid& m) {
  const int n = m.size();
  require_desk_scale(n, "laminarity test");
  const auto ranks =
      detail::rank_table(n, detail::dependence_table(n, m.circuits()));
  auto close = [&](ElementSet x) {
    ElementSet out = x;
    for (int e = 0; e < n; ++e) {
      if (ranks[x.with(e).bits()] == ranks[x.bits()]) out = out.with(e);
    }
    return out;
  };
  std::vector<ElementSet> non_spanning;
  std::vector<ElementSet> closures;
  for (ElementSet c : m.circuits()) {
    if (c.size() <= m.rank()) {
      non_spanning.push_back(c);
      closures.push_back(close(c));
    }
  }
  LaminarVerdict verdict;
  for (std::size_t i = 0; i < non_spanning.size(); ++i) {
    for (std::size_t j = i + 1; j < non_spanning.size(); ++j) {
      if (!non_spanning[i].intersects(non_spanning[j])) continue;
      if (closures[i].is_subset_of(closures[j]) ||
          closures[j].is_subset_of(closures[i])) {
        continue;
      }
      verdict.violating_pair = {non_spanning[i], non_spanning[j]};
      return verdict;
    }
  }
  auto canonical = canonical_from_matroid(m);
  if (!canonical || to_explicit(canonical->presentation()) != m) {
    throw std::logic_error("circuit-pair test passed but no presentation found");
  }
  verdict.is_laminar = true;
  verdict.presentation = std::move(canonical);
  return verdict;
}

bool is_violating_pair(const ExplicitMatroid& m, ElementSet c1, ElementSet c2) {
  auto is_circuit = [&](ElementSet c) {
    return std::find(m.circuits().begin(), m.circuits().end(), c) !=
           m.circuits().end();
  };
  if (!is_circuit(c1) || !is_circuit(c2) || !c1.intersects(c2)) return false;
  const ElementSet a = closure(m, c1);
  const ElementSet b = closure(m, c2);
  return !a.is_subset_of(b) && !b.is_subset_of(a);
}

NestedVerdict is_nested(const ExplicitMatroid& m) {
  NestedVerdict verdict;
  const auto flats = cyclic_flats(m);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      if (!flats[i].is_subset_of(flats[j])) {
        verdict.incomparable = {flats[i], flats[j]};
        return verdict;
      }
    }
  }
  verdict.is_nested = true;
  verdict.chain = flats;
  return verdict;
}

ComponentShape component_shape(const ExplicitMatroid& component) {
  ComponentShape shape;
  shape.elements = component.ground().all();
  if (is_nested(component).is_nested) {
    shape.kind = ComponentShape::Kind::kNested;
    return shape;
  }
  const Mask all = component.ground().all().bits();
  // Bipartitions with element 0 on the first side.
  for (Mask side = 1; side < all; side += 2) {
    const ElementSet s1(side);
    const ElementSet s2(all & ~side);
    const ExplicitMatroid m1 = restrict_to(component, s1);
    const ExplicitMatroid m2 = restrict_to(component, s2);
    if (m1.rank() == 0 || m2.rank() == 0) continue;
    if (!is_uniform(m1) || !is_uniform(m2)) continue;
    ExplicitMatroid sum = direct_sum(m1, m2);
    if (sum.rank() < component.rank()) continue;
    while (sum.rank() > component.rank()) sum = truncate(sum);
    if (sum != component) continue;
    shape.kind = ComponentShape::Kind::kTruncatedSum;
    shape.side1 = s1;
    shape.side2 = s2;
    shape.rank1 = m1.rank();
    shape.rank2 = m2.rank();
    shape.truncated_rank = component.rank();
    return shape;
  }
  return shape;
}

DualLaminarVerdict classify_dual_laminar(const ExplicitMatroid& m) {
  DualLaminarVerdict verdict;
  verdict.laminar = is_laminar(m).is_laminar;
  verdict.dual_laminar = is_laminar(dual(m)).is_laminar;
  verdict.is_dual_laminar = verdict.laminar && verdict.dual_laminar;
  verdict.structural = true;
  for (ElementSet block : components(m)) {
    ComponentShape local = component_shape(restrict_to(m, block));
    const auto positions = block.indices();
    auto lift = [&](ElementSet s) {
      ElementSet out;
      for (int i : s) out = out.with(positions[i]);
      return out;
    };
    local.elements = block;
    local.side1 = lift(local.side1);
    local.side2 = lift(local.side2);
    if (local.kind == ComponentShape::Kind::kNeither) verdict.structural = false;
    verdict.components.push_back(local);
  }
  if (!verdict.laminar) {
    verdict.reason = "matroid is not laminar";
  } else if (!verdict.dual_laminar) {
    verdict.reason = "dual is not laminar";
  }
  return verdict;
}

MinorFreeVerdict excludes_minors(
    const ExplicitMatroid& m,
    const std::vector<std::pair<std::string, ExplicitMatroid>>& excluded) {
  MinorFreeVerdict verdict;
  for (const auto& [name, target] : excluded) {
    if (auto w = has_minor(m, target)) {
      verdict.hit = ExcludedMinorHit{name, target, std::move(*w)};
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

MinorFreeVerdict classify_binary_laminar(const ExplicitMatroid& m) {
  static const std::vector<std::pair<std::string, ExplicitMatroid>> excluded{
      {"Y_3", build_yr(3)}, {"U_{2,4}", uniform_matroid(2, 4)}};
  return excludes_minors(m, excluded);
}

MinorFreeVerdict classify_ternary_laminar(const ExplicitMatroid& m) {
  static const std::vector<std::pair<std::string, ExplicitMatroid>> excluded{
      {"U_{2,5}", uniform_matroid(2, 5)},
      {"U_{3,5}", uniform_matroid(3, 5)},
      {"Y_3", build_yr(3)}};
  return excludes_minors(m, excluded);
}

std::optional<YrWitness> excluded_minor_witness(const ExplicitMatroid& m) {
  require_desk_scale(m.size(), "excluded-minor search");
  for (int r = 3; 2 * r - 1 <= m.size(); ++r) {
    if (auto w = has_minor(m, build_yr(r))) return YrWitness{r, std::move(*w)};
  }
  return std::nullopt;
}

Classification classify(const ExplicitMatroid& m) {
  return {is_laminar(m), is_nested(m), classify_dual_laminar(m),
          classify_binary_laminar(m), classify_ternary_laminar(m)};
}

}  // namespace laminar
