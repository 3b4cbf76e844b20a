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

#include "laminar/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "laminar/error.hpp"
#include "subset_tables.hpp"

namespace laminar {

using detail::Mask;

LaminarFamily LaminarFamily::build(const GroundSet& ground,
                                   std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), LexLess{});
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      ElementSet a = sets[i];
      ElementSet b = sets[j];
      if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a)) {
        throw Error(ErrorKind::kNotLaminar,
                    ground.format(a) + " crosses " + ground.format(b));
      }
    }
  }
  // Parent = smallest strict superset; unique by laminarity.
  const int count = static_cast<int>(sets.size());
  std::vector<int> parent(count, -1);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (!sets[i].is_proper_subset_of(sets[j])) continue;
      if (parent[i] < 0 || sets[j].size() < sets[parent[i]].size()) {
        parent[i] = j;
      }
    }
  }
  std::vector<std::vector<int>> kids(count);
  std::vector<int> top;
  for (int i = 0; i < count; ++i) {
    (parent[i] < 0 ? top : kids[parent[i]]).push_back(i);
  }
  // `sets` is lex-sorted, so index order is sibling order.
  LaminarFamily family;
  std::vector<int> new_index(count, -1);
  auto visit = [&](auto&& self, int i) -> void {
    new_index[i] = static_cast<int>(family.sets_.size());
    family.sets_.push_back(sets[i]);
    for (int k : kids[i]) self(self, k);
  };
  for (int r : top) visit(visit, r);
  family.parent_.assign(count, -1);
  family.children_.assign(count, {});
  for (int i = 0; i < count; ++i) {
    const int ni = new_index[i];
    if (parent[i] >= 0) family.parent_[ni] = new_index[parent[i]];
    for (int k : kids[i]) family.children_[ni].push_back(new_index[k]);
  }
  for (int r : top) family.roots_.push_back(new_index[r]);
  family.free_part_.resize(count);
  for (int i = 0; i < count; ++i) {
    ElementSet rest = family.sets_[i];
    for (int k : family.children_[i]) rest = rest - family.sets_[k];
    family.free_part_[i] = rest;
  }
  return family;
}

ElementSet LaminarFamily::uncovered(ElementSet universe) const {
  for (int r : roots_) universe = universe - sets_[r];
  return universe;
}

std::optional<int> LaminarFamily::find(ElementSet set) const {
  auto it = std::find(sets_.begin(), sets_.end(), set);
  if (it == sets_.end()) return std::nullopt;
  return static_cast<int>(it - sets_.begin());
}

std::vector<CapacitatedSet> LaminarPresentation::members() const {
  std::vector<CapacitatedSet> out;
  for (int i = 0; i < size(); ++i) out.push_back({set(i), capacity(i)});
  return out;
}

int LaminarPresentation::capacity_bound(int i) const {
  int bound = family_.free_part(i).size();
  for (int k : family_.children(i)) bound += capacities_[k];
  return bound;
}

LaminarPresentation validate_presentation(GroundSet ground,
                                          std::vector<CapacitatedSet> sets) {
  std::map<Mask, int> capacity_of;
  for (const auto& s : sets) {
    ground.check_subset(s.members);
    if (s.members.empty()) {
      throw Error(ErrorKind::kEmptyMemberSet, "family members must be nonempty");
    }
    if (s.capacity < 0) {
      throw Error(ErrorKind::kNegativeCapacity,
                  ground.format(s.members) + " has capacity " +
                      std::to_string(s.capacity));
    }
    auto [it, inserted] = capacity_of.emplace(s.members.bits(), s.capacity);
    if (!inserted) it->second = std::min(it->second, s.capacity);
  }
  std::vector<ElementSet> distinct;
  for (const auto& [bits, cap] : capacity_of) distinct.emplace_back(bits);
  LaminarPresentation p;
  p.family_ = LaminarFamily::build(ground, std::move(distinct));
  for (ElementSet s : p.family_.sets()) {
    p.capacities_.push_back(capacity_of.at(s.bits()));
  }
  p.ground_ = std::move(ground);
  return p;
}

LaminarPresentation validate_presentation(
    const std::vector<std::string>& ground,
    const std::vector<std::pair<std::vector<std::string>, int>>& sets) {
  GroundSet g(ground);
  std::vector<CapacitatedSet> members;
  for (const auto& [ids, cap] : sets) members.push_back({g.set_of(ids), cap});
  return validate_presentation(std::move(g), std::move(members));
}

bool lam_is_independent(const LaminarPresentation& p, ElementSet set) {
  p.ground().check_subset(set);
  for (int i = 0; i < p.size(); ++i) {
    if ((set & p.set(i)).size() > p.capacity(i)) return false;
  }
  return true;
}

int lam_rank(const LaminarPresentation& p, ElementSet set) {
  p.ground().check_subset(set);
  const auto& family = p.family();
  std::vector<int> best(family.size(), 0);
  // Preorder reversed visits children before parents.
  for (int i = family.size() - 1; i >= 0; --i) {
    int inner = (set & family.free_part(i)).size();
    for (int k : family.children(i)) inner += best[k];
    best[i] = std::min(p.capacity(i), inner);
  }
  int total = family.uncovered(set).size();
  for (int r : family.roots()) total += best[r];
  return total;
}

ExplicitMatroid to_explicit(const LaminarPresentation& p) {
  const int n = p.ground().size();
  require_desk_scale(n, "explicit expansion");
  const auto members = p.members();
  std::vector<std::uint8_t> dependent(std::size_t{1} << n, 0);
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    for (const auto& s : members) {
      if (std::popcount(x & s.members.bits()) > s.capacity) {
        dependent[x] = 1;
        break;
      }
    }
  }
  return ExplicitMatroid::from_trusted(p.ground(),
                                       detail::minimal_dependent(n, dependent));
}

namespace {

LaminarPresentation without_member(const LaminarPresentation& p, int drop) {
  std::vector<CapacitatedSet> rest;
  for (int i = 0; i < p.size(); ++i) {
    if (i != drop) rest.push_back({p.set(i), p.capacity(i)});
  }
  return validate_presentation(p.ground(), std::move(rest));
}

ElementSet remap(const GroundSet& from, const GroundSet& to, ElementSet set) {
  ElementSet out;
  for (int i : set) out = out.with(to.index_of(from.name(i)));
  return out;
}

}  // namespace

LaminarPresentation prune_inessential(const LaminarPresentation& p) {
  LaminarPresentation current = p;
  for (;;) {
    std::optional<int> drop;
    for (int i = 0; i < current.size() && !drop; ++i) {
      // A strict superset of no larger capacity makes i redundant.
      for (int a = current.family().parent(i); a >= 0;
           a = current.family().parent(a)) {
        if (current.capacity(i) >= current.capacity(a)) {
          drop = i;
          break;
        }
      }
    }
    for (int i = 0; i < current.size() && !drop; ++i) {
      if (current.capacity(i) >= current.capacity_bound(i)) drop = i;
    }
    if (!drop) return current;
    current = without_member(current, *drop);
  }
}

std::optional<CanonicalPresentation> canonical_from_matroid(
    const ExplicitMatroid& m) {
  const int n = m.size();
  require_desk_scale(n, "canonical presentation");
  const auto ranks =
      detail::rank_table(n, detail::dependence_table(n, m.circuits()));
  const ElementSet loops = loop_set(m);
  auto close = [&](ElementSet x) {
    ElementSet out = x;
    for (int e = 0; e < n; ++e) {
      if (ranks[x.with(e).bits()] == ranks[x.bits()]) out = out.with(e);
    }
    return out;
  };
  // closure - loops -> (capacity, evidence)
  std::map<Mask, std::pair<int, ElementSet>> found;
  for (ElementSet c : m.circuits()) {
    if (c.size() < 2) continue;
    const ElementSet flat = close(c) - loops;
    auto [it, inserted] = found.emplace(flat.bits(), std::pair{c.size() - 1, c});
    if (!inserted && (c.size() - 1 > it->second.first ||
                      (c.size() - 1 == it->second.first &&
                       lex_less(c, it->second.second)))) {
      it->second = {c.size() - 1, c};
    }
  }
  std::vector<CapacitatedSet> sets;
  for (const auto& [bits, info] : found) {
    sets.push_back({ElementSet(bits), info.first});
  }
  if (!loops.empty()) sets.push_back({loops, 0});
  CanonicalPresentation out;
  try {
    out.presentation_ = validate_presentation(m.ground(), std::move(sets));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotLaminar) return std::nullopt;
    throw;
  }
  out.loop_set_ = loops;
  for (ElementSet s : out.presentation_.family().sets()) {
    auto it = found.find(s.bits());
    out.evidence_.push_back(s == loops || it == found.end()
                                ? ElementSet{}
                                : it->second.second);
  }
  return out;
}

CanonicalPresentation canonicalize(const LaminarPresentation& p) {
  require_desk_scale(p.ground().size(), "canonicalize");
  auto canonical = canonical_from_matroid(to_explicit(prune_inessential(p)));
  // Circuit closures of a laminar matroid always form a laminar family.
  if (!canonical) {
    throw Error(ErrorKind::kNotLaminar, "circuit closures are not laminar");
  }
  return *canonical;
}

bool is_canonical(const LaminarPresentation& p) {
  return canonicalize(p).presentation() == p;
}

std::vector<int> mixed_free_parts(const CanonicalPresentation& p) {
  const LaminarPresentation& pres = p.presentation();
  const ExplicitMatroid m = to_explicit(pres);
  std::vector<int> out;
  for (int i = 0; i < pres.size(); ++i) {
    if (pres.set(i) == p.loop_set()) continue;
    ExplicitMatroid part = restrict_to(m, pres.set(i));
    const ElementSet coloops = coloop_set(part);
    const auto positions = pres.set(i).indices();
    bool has_coloop = false;
    bool has_other = false;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      if (!pres.family().free_part(i).contains(positions[k])) continue;
      (coloops.contains(static_cast<int>(k)) ? has_coloop : has_other) = true;
    }
    if (has_coloop && has_other) out.push_back(i);
  }
  return out;
}

LaminarPresentation lam_delete(const LaminarPresentation& p, int element) {
  if (element < 0 || element >= p.ground().size()) {
    throw Error(ErrorKind::kForeignElement, "element position out of range");
  }
  const ElementSet keep = p.ground().all().without(element);
  GroundSet ground(p.ground().names_of(keep));
  std::vector<CapacitatedSet> sets;
  for (int i = 0; i < p.size(); ++i) {
    const ElementSet image(detail::compress(p.set(i).bits(), keep.bits()));
    if (!image.empty()) sets.push_back({image, p.capacity(i)});
  }
  return validate_presentation(std::move(ground), std::move(sets));
}

LaminarPresentation lam_contract(const LaminarPresentation& p, int element) {
  if (element < 0 || element >= p.ground().size()) {
    throw Error(ErrorKind::kForeignElement, "element position out of range");
  }
  if (lam_rank(p, ElementSet::singleton(element)) == 0) {
    return lam_delete(p, element);
  }
  const ElementSet keep = p.ground().all().without(element);
  GroundSet ground(p.ground().names_of(keep));
  std::vector<CapacitatedSet> sets;
  for (int i = 0; i < p.size(); ++i) {
    const ElementSet image(detail::compress(p.set(i).bits(), keep.bits()));
    const int cap = p.capacity(i) - (p.set(i).contains(element) ? 1 : 0);
    if (!image.empty()) sets.push_back({image, cap});
  }
  return validate_presentation(std::move(ground), std::move(sets));
}

LaminarPresentation lam_direct_sum(const LaminarPresentation& p1,
                                   const LaminarPresentation& p2) {
  std::vector<std::string> names = p1.ground().names();
  const auto renamed = detail::fresh_names(names, p2.ground().names());
  names.insert(names.end(), renamed.begin(), renamed.end());
  GroundSet ground(names);
  std::vector<CapacitatedSet> sets;
  for (int i = 0; i < p1.size(); ++i) {
    sets.push_back({remap(p1.ground(), ground, p1.set(i)), p1.capacity(i)});
  }
  for (int i = 0; i < p2.size(); ++i) {
    ElementSet image;
    for (int e : p2.set(i)) image = image.with(ground.index_of(renamed[e]));
    sets.push_back({image, p2.capacity(i)});
  }
  return validate_presentation(std::move(ground), std::move(sets));
}

LaminarPresentation lam_truncate(const LaminarPresentation& p) {
  const int r = lam_rank(p, p.ground().all());
  if (r == 0) throw Error(ErrorKind::kRankZero, "cannot truncate rank 0");
  auto sets = p.members();
  sets.push_back({p.ground().all(), r - 1});
  return validate_presentation(p.ground(), std::move(sets));
}

LaminarPresentation lam_add_coloop(const LaminarPresentation& p,
                                   const std::string& id) {
  if (p.ground().find(id)) {
    throw Error(ErrorKind::kDuplicateElement, "'" + id + "' already present");
  }
  std::vector<std::string> names = p.ground().names();
  names.push_back(id);
  GroundSet ground(std::move(names));
  std::vector<CapacitatedSet> sets;
  for (int i = 0; i < p.size(); ++i) {
    sets.push_back({remap(p.ground(), ground, p.set(i)), p.capacity(i)});
  }
  return validate_presentation(std::move(ground), std::move(sets));
}

LaminarPresentation lam_parallel_extend(const CanonicalPresentation& p,
                                        int element, const std::string& id) {
  const LaminarPresentation& pres = p.presentation();
  if (element < 0 || element >= pres.ground().size()) {
    throw Error(ErrorKind::kForeignElement, "element position out of range");
  }
  if (p.loop_set().contains(element) ||
      lam_rank(pres, ElementSet::singleton(element)) == 0) {
    throw Error(ErrorKind::kLoopBase,
                "'" + pres.ground().name(element) + "' is a loop");
  }
  if (pres.ground().find(id)) {
    throw Error(ErrorKind::kDuplicateElement, "'" + id + "' already present");
  }
  std::vector<std::string> names = pres.ground().names();
  names.push_back(id);
  GroundSet ground(std::move(names));
  const int e = ground.index_of(pres.ground().name(element));
  const int f = ground.index_of(id);
  bool in_parallel_pair = false;
  std::vector<CapacitatedSet> sets;
  for (int i = 0; i < pres.size(); ++i) {
    ElementSet image = remap(pres.ground(), ground, pres.set(i));
    if (image.contains(e)) {
      image = image.with(f);
      if (pres.capacity(i) == 1) in_parallel_pair = true;
    }
    sets.push_back({image, pres.capacity(i)});
  }
  if (!in_parallel_pair) {
    sets.push_back({ElementSet::singleton(e).with(f), 1});
  }
  return validate_presentation(std::move(ground), std::move(sets));
}

LaminarPresentation lam_restrict(const LaminarPresentation& p, ElementSet keep) {
  p.ground().check_subset(keep);
  GroundSet ground(p.ground().names_of(keep));
  std::vector<CapacitatedSet> sets;
  for (int i = 0; i < p.size(); ++i) {
    const ElementSet image(detail::compress(p.set(i).bits(), keep.bits()));
    if (!image.empty()) sets.push_back({image, p.capacity(i)});
  }
  return validate_presentation(std::move(ground), std::move(sets));
}

WeightedSelection max_weight_independent(const LaminarPresentation& p,
                                         const std::vector<Weight>& weights) {
  if (static_cast<int>(weights.size()) != p.ground().size()) {
    throw Error(ErrorKind::kBadParams, "weights must cover the ground set");
  }
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  WeightedSelection out{ElementSet{}, Weight(0)};
  for (int e : order) {
    if (weights[e] <= Weight(0)) break;
    const ElementSet candidate = out.set.with(e);
    if (lam_is_independent(p, candidate)) {
      out.set = candidate;
      out.weight += weights[e];
    }
  }
  return out;
}

}  // namespace laminar
