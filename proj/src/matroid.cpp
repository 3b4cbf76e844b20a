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

#include "laminar/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "laminar/error.hpp"
#include "subset_tables.hpp"

namespace laminar {

using detail::Mask;

ExplicitMatroid::ExplicitMatroid(GroundSet ground,
                                 std::vector<ElementSet> circuits)
    : ground_(std::move(ground)), circuits_(std::move(circuits)) {
  std::sort(circuits_.begin(), circuits_.end(), LexLess{});
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()),
                  circuits_.end());
  rank_ = laminar::rank(*this, ground_.all());
}

ExplicitMatroid ExplicitMatroid::from_trusted(GroundSet ground,
                                              std::vector<ElementSet> circuits) {
  return ExplicitMatroid(std::move(ground), std::move(circuits));
}

namespace {

ExplicitMatroid assemble(std::vector<std::string> names,
                         std::vector<ElementSet> circuits) {
  auto sorted = detail::sort_names(std::move(names), std::move(circuits));
  return ExplicitMatroid::from_trusted(GroundSet(std::move(sorted.names)),
                                       std::move(sorted.sets));
}

bool contains_circuit(std::span<const ElementSet> circuits, ElementSet x) {
  return std::any_of(circuits.begin(), circuits.end(),
                     [x](ElementSet c) { return c.is_subset_of(x); });
}

void check_element(const ExplicitMatroid& m, int e, const char* what) {
  if (e < 0 || e >= m.size()) {
    throw Error(ErrorKind::kBadBasepoint,
                std::string(what) + " position " + std::to_string(e) +
                    " is out of range");
  }
}

}  // namespace

std::string circuit_axiom_violation(const GroundSet& ground,
                                    std::span<const ElementSet> circuits) {
  for (ElementSet c : circuits) {
    if (c.empty()) return "the empty set is listed as a circuit";
    if (!c.is_subset_of(ground.all())) return "circuit outside the ground set";
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && circuits[i].is_proper_subset_of(circuits[j])) {
        return ground.format(circuits[i]) + " is contained in " +
               ground.format(circuits[j]);
      }
    }
  }
  const auto dependent = detail::dependence_table(ground.size(), circuits);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      if (circuits[i] == circuits[j]) continue;
      for (int e : circuits[i] & circuits[j]) {
        ElementSet rest = (circuits[i] | circuits[j]).without(e);
        if (!dependent[rest.bits()]) {
          return "elimination fails for " + ground.format(circuits[i]) + ", " +
                 ground.format(circuits[j]) + " at " + ground.name(e);
        }
      }
    }
  }
  return {};
}

ExplicitMatroid build_matroid(GroundSet ground,
                              std::vector<ElementSet> circuits) {
  require_desk_scale(ground.size(), "circuit validation");
  for (ElementSet c : circuits) ground.check_subset(c);
  std::sort(circuits.begin(), circuits.end(), LexLess{});
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  for (ElementSet c : circuits) {
    if (c.empty()) {
      throw Error(ErrorKind::kBadParams, "the empty set cannot be a circuit");
    }
  }
  for (ElementSet a : circuits) {
    for (ElementSet b : circuits) {
      if (a.is_proper_subset_of(b)) {
        throw Error(ErrorKind::kNotAnAntichain,
                    ground.format(a) + " is contained in " + ground.format(b));
      }
    }
  }
  std::string violation = circuit_axiom_violation(ground, circuits);
  if (!violation.empty()) throw Error(ErrorKind::kEliminationFails, violation);
  return ExplicitMatroid::from_trusted(std::move(ground), std::move(circuits));
}

ExplicitMatroid build_matroid(
    const std::vector<std::string>& ground,
    const std::vector<std::vector<std::string>>& circuits) {
  GroundSet g(ground);
  std::vector<ElementSet> sets;
  for (const auto& c : circuits) sets.push_back(g.set_of(c));
  return build_matroid(std::move(g), std::move(sets));
}

ExplicitMatroid from_independence_oracle(
    GroundSet ground, const std::function<bool(ElementSet)>& independent) {
  const int n = ground.size();
  require_desk_scale(n, "independence enumeration");
  std::vector<std::uint8_t> dependent(std::size_t{1} << n);
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    dependent[x] = independent(ElementSet(x)) ? 0 : 1;
  }
  return ExplicitMatroid::from_trusted(std::move(ground),
                                       detail::minimal_dependent(n, dependent));
}

bool is_independent(const ExplicitMatroid& m, ElementSet x) {
  m.ground().check_subset(x);
  return !contains_circuit(m.circuits(), x);
}

int rank(const ExplicitMatroid& m, ElementSet x) {
  m.ground().check_subset(x);
  ElementSet basis;
  for (int e : x) {
    ElementSet candidate = basis.with(e);
    if (!contains_circuit(m.circuits(), candidate)) basis = candidate;
  }
  return basis.size();
}

ElementSet closure(const ExplicitMatroid& m, ElementSet x) {
  const int r = rank(m, x);
  ElementSet out = x;
  for (int e = 0; e < m.size(); ++e) {
    if (!x.contains(e) && rank(m, x.with(e)) == r) out = out.with(e);
  }
  return out;
}

ExplicitMatroid dual(const ExplicitMatroid& m) {
  const int n = m.size();
  require_desk_scale(n, "dual");
  const auto ranks =
      detail::rank_table(n, detail::dependence_table(n, m.circuits()));
  const Mask all = m.ground().all().bits();
  std::vector<std::uint8_t> co_dependent(std::size_t{1} << n);
  for (Mask x = 0; x <= all; ++x) {
    co_dependent[x] = ranks[all & ~x] == m.rank() ? 0 : 1;
  }
  return ExplicitMatroid::from_trusted(
      m.ground(), detail::minimal_dependent(n, co_dependent));
}

ExplicitMatroid minor(const ExplicitMatroid& m, ElementSet delete_set,
                      ElementSet contract_set) {
  m.ground().check_subset(delete_set);
  m.ground().check_subset(contract_set);
  if (delete_set.intersects(contract_set)) {
    throw Error(ErrorKind::kOverlappingSets,
                "deleted and contracted sets share " +
                    m.ground().format(delete_set & contract_set));
  }
  std::vector<ElementSet> candidates;
  for (ElementSet c : m.circuits()) {
    ElementSet rest = c - contract_set;
    if (!rest.empty()) candidates.push_back(rest);
  }
  std::vector<ElementSet> contracted = detail::minimal_members(candidates);
  const ElementSet keep = m.ground().all() - delete_set - contract_set;
  std::vector<ElementSet> circuits;
  for (ElementSet c : contracted) {
    if (!c.intersects(delete_set)) {
      circuits.emplace_back(detail::compress(c.bits(), keep.bits()));
    }
  }
  return ExplicitMatroid::from_trusted(GroundSet(m.ground().names_of(keep)),
                                       std::move(circuits));
}

ExplicitMatroid restrict_to(const ExplicitMatroid& m, ElementSet keep) {
  m.ground().check_subset(keep);
  return minor(m, m.ground().all() - keep, ElementSet{});
}

ExplicitMatroid truncate(const ExplicitMatroid& m) {
  const int r = m.rank();
  if (r == 0) throw Error(ErrorKind::kRankZero, "cannot truncate rank 0");
  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    if (c.size() <= r) circuits.push_back(c);
  }
  // Every basis becomes a spanning circuit of the truncation.
  for (Mask x = (Mask{1} << r) - 1; x != 0;
       x = detail::next_same_popcount(x, m.size())) {
    if (!contains_circuit(m.circuits(), ElementSet(x))) circuits.emplace_back(x);
  }
  return ExplicitMatroid::from_trusted(m.ground(), std::move(circuits));
}

ExplicitMatroid direct_sum(const ExplicitMatroid& m1,
                           const ExplicitMatroid& m2) {
  std::vector<std::string> names = m1.ground().names();
  for (auto& name : detail::fresh_names(names, m2.ground().names())) {
    names.push_back(std::move(name));
  }
  std::vector<ElementSet> circuits(m1.circuits().begin(), m1.circuits().end());
  for (ElementSet c : m2.circuits()) {
    circuits.emplace_back(c.bits() << m1.size());
  }
  return assemble(std::move(names), std::move(circuits));
}

ExplicitMatroid parallel_connection(const ExplicitMatroid& m1,
                                    const ExplicitMatroid& m2, int p1, int p2) {
  check_element(m1, p1, "basepoint");
  check_element(m2, p2, "basepoint");
  auto bad = [](const ExplicitMatroid& m, int p) {
    bool in_circuit = false;
    for (ElementSet c : m.circuits()) {
      if (c == ElementSet::singleton(p)) return true;
      if (c.contains(p)) in_circuit = true;
    }
    return !in_circuit;
  };
  if (bad(m1, p1) || bad(m2, p2)) {
    throw Error(ErrorKind::kBadBasepoint,
                "basepoints must be neither loops nor coloops");
  }
  std::vector<std::string> names = m1.ground().names();
  std::vector<std::string> incoming;
  std::vector<int> position(m2.size());
  for (int j = 0; j < m2.size(); ++j) {
    if (j == p2) {
      position[j] = p1;
      continue;
    }
    position[j] = m1.size() + static_cast<int>(incoming.size());
    incoming.push_back(m2.ground().name(j));
  }
  for (auto& name : detail::fresh_names(names, incoming)) {
    names.push_back(std::move(name));
  }
  auto lift = [&](ElementSet c) {
    ElementSet out;
    for (int j : c) out = out.with(position[j]);
    return out;
  };
  std::vector<ElementSet> circuits(m1.circuits().begin(), m1.circuits().end());
  std::vector<ElementSet> through2;
  for (ElementSet c : m2.circuits()) {
    circuits.push_back(lift(c));
    if (c.contains(p2)) through2.push_back(lift(c));
  }
  for (ElementSet c1 : m1.circuits()) {
    if (!c1.contains(p1)) continue;
    for (ElementSet c2 : through2) circuits.push_back((c1 | c2).without(p1));
  }
  return assemble(std::move(names), std::move(circuits));
}

ExplicitMatroid two_sum(const ExplicitMatroid& m1, const ExplicitMatroid& m2,
                        int p1, int p2) {
  if (m1.size() < 3 || m2.size() < 3) {
    throw Error(ErrorKind::kTooSmall, "2-sum needs at least 3 elements a side");
  }
  ExplicitMatroid joined = parallel_connection(m1, m2, p1, p2);
  const int p = joined.ground().index_of(m1.ground().name(p1));
  return minor(joined, ElementSet::singleton(p), ElementSet{});
}

ExplicitMatroid simplify(const ExplicitMatroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  ElementSet drop;
  for (ElementSet c : m.circuits()) {
    if (c.size() == 1) drop = drop | c;
  }
  for (ElementSet c : m.circuits()) {
    if (c.size() != 2) continue;
    int a = find(c.first());
    int b = find(c.without(c.first()).first());
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (int e = 0; e < n; ++e) {
    if (find(e) != e) drop = drop.with(e);
  }
  return minor(m, drop, ElementSet{});
}

ExplicitMatroid relabel(const ExplicitMatroid& m,
                        const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != m.size()) {
    throw Error(ErrorKind::kBadParams, "relabelling has the wrong length");
  }
  return assemble(names, {m.circuits().begin(), m.circuits().end()});
}

std::vector<ElementSet> components(const ExplicitMatroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : m.circuits()) {
    const int root = find(c.first());
    for (int e : c) {
      int r = find(e);
      if (r != root) parent[r] = root;
    }
  }
  std::vector<ElementSet> blocks;
  std::vector<int> block_of(n, -1);
  for (int e = 0; e < n; ++e) {
    int r = find(e);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]] = blocks[block_of[r]].with(e);
  }
  return blocks;
}

bool is_connected(const ExplicitMatroid& m) {
  return components(m).size() <= 1;
}

std::vector<ElementSet> cyclic_flats(const ExplicitMatroid& m) {
  const int n = m.size();
  require_desk_scale(n, "cyclic flats");
  const auto ranks =
      detail::rank_table(n, detail::dependence_table(n, m.circuits()));
  std::vector<ElementSet> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      const Mask bit = Mask{1} << e;
      if (x & bit) {
        ok = ranks[x ^ bit] == ranks[x];
      } else {
        ok = ranks[x | bit] > ranks[x];
      }
    }
    if (ok) out.emplace_back(x);
  }
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

std::vector<ElementSet> loops(const ExplicitMatroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) {
    if (c.size() == 1) out.push_back(c);
  }
  return out;
}

ElementSet loop_set(const ExplicitMatroid& m) {
  ElementSet out;
  for (ElementSet c : loops(m)) out = out | c;
  return out;
}

ElementSet coloop_set(const ExplicitMatroid& m) {
  ElementSet covered;
  for (ElementSet c : m.circuits()) covered = covered | c;
  return m.ground().all() - covered;
}

bool is_uniform(const ExplicitMatroid& m) {
  const int r = m.rank();
  const int n = m.size();
  if (r == n) return m.circuits().empty();
  // U_{r,n} has exactly C(n, r+1) circuits, all of size r+1.
  long long expected = 1;
  for (int i = 0; i < r + 1; ++i) expected = expected * (n - i) / (i + 1);
  return static_cast<long long>(m.circuits().size()) == expected &&
         std::all_of(m.circuits().begin(), m.circuits().end(),
                     [r](ElementSet c) { return c.size() == r + 1; });
}

namespace {

// Per-element count of containing circuits, bucketed by circuit size.
std::vector<std::vector<int>> element_profiles(const ExplicitMatroid& m) {
  std::vector<std::vector<int>> profile(m.size(),
                                        std::vector<int>(m.size() + 1, 0));
  for (ElementSet c : m.circuits()) {
    for (int e : c) ++profile[e][c.size()];
  }
  return profile;
}

std::vector<int> size_histogram(const ExplicitMatroid& m) {
  std::vector<int> h(m.size() + 1, 0);
  for (ElementSet c : m.circuits()) ++h[c.size()];
  return h;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const ExplicitMatroid& a, const ExplicitMatroid& b)
      : a_(a), b_(b), n_(a.size()) {
    profile_a_ = element_profiles(a);
    profile_b_ = element_profiles(b);
    circuits_b_.assign(b.circuits().begin(), b.circuits().end());
    circuits_a_.assign(a.circuits().begin(), a.circuits().end());
    auto by_bits = [](ElementSet x, ElementSet y) { return x.bits() < y.bits(); };
    std::sort(circuits_a_.begin(), circuits_a_.end(), by_bits);
    std::sort(circuits_b_.begin(), circuits_b_.end(), by_bits);
    through_a_.resize(n_);
    through_b_.resize(n_);
    for (ElementSet c : a.circuits()) {
      for (int e : c) through_a_[e].push_back(c);
    }
    for (ElementSet c : b.circuits()) {
      for (int e : c) through_b_[e].push_back(c);
    }
    // Assign the most constrained elements first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return through_a_[x].size() > through_a_[y].size();
    });
    forward_.assign(n_, -1);
    backward_.assign(n_, -1);
  }

  std::optional<ElementMap> run() {
    auto pa = profile_a_;
    auto pb = profile_b_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return forward_;
  }

 private:
  bool has(const std::vector<ElementSet>& sorted, ElementSet c) const {
    return std::binary_search(
        sorted.begin(), sorted.end(), c,
        [](ElementSet x, ElementSet y) { return x.bits() < y.bits(); });
  }

  bool consistent(int x, int y) const {
    for (ElementSet c : through_a_[x]) {
      if (!c.is_subset_of(assigned_a_)) continue;
      ElementSet image;
      for (int e : c) image = image.with(forward_[e]);
      if (!has(circuits_b_, image)) return false;
    }
    for (ElementSet c : through_b_[y]) {
      if (!c.is_subset_of(assigned_b_)) continue;
      ElementSet image;
      for (int e : c) image = image.with(backward_[e]);
      if (!has(circuits_a_, image)) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    const int x = order_[depth];
    for (int y = 0; y < n_; ++y) {
      if (backward_[y] >= 0 || profile_a_[x] != profile_b_[y]) continue;
      forward_[x] = y;
      backward_[y] = x;
      assigned_a_ = assigned_a_.with(x);
      assigned_b_ = assigned_b_.with(y);
      if (consistent(x, y) && extend(depth + 1)) return true;
      forward_[x] = -1;
      backward_[y] = -1;
      assigned_a_ = assigned_a_.without(x);
      assigned_b_ = assigned_b_.without(y);
    }
    return false;
  }

  const ExplicitMatroid& a_;
  const ExplicitMatroid& b_;
  int n_;
  std::vector<std::vector<int>> profile_a_, profile_b_;
  std::vector<ElementSet> circuits_a_, circuits_b_;
  std::vector<std::vector<ElementSet>> through_a_, through_b_;
  std::vector<int> order_;
  ElementMap forward_, backward_;
  ElementSet assigned_a_, assigned_b_;
};

}  // namespace

std::optional<ElementMap> is_isomorphic(const ExplicitMatroid& m1,
                                        const ExplicitMatroid& m2) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank() ||
      m1.circuits().size() != m2.circuits().size() ||
      size_histogram(m1) != size_histogram(m2)) {
    return std::nullopt;
  }
  return IsomorphismSearch(m1, m2).run();
}

std::optional<MinorWitness> has_minor(const ExplicitMatroid& m,
                                      const ExplicitMatroid& n) {
  const int size_m = m.size();
  const int contract_count = m.rank() - n.rank();
  const int delete_count = size_m - n.size() - contract_count;
  if (n.size() > size_m || contract_count < 0 || delete_count < 0) {
    return std::nullopt;
  }
  require_desk_scale(size_m, "minor search");
  const auto dependent = detail::dependence_table(size_m, m.circuits());
  const auto ranks = detail::rank_table(size_m, dependent);
  const Mask all = m.ground().all().bits();
  const auto target_histogram = size_histogram(n);

  auto subsets = [](int k, Mask within, auto&& visit) {
    // Increasing bitmask order over k-subsets of `within`.
    const int width = std::popcount(within);
    if (k > width) return false;
    if (k == 0) return visit(Mask{0});
    for (Mask x = (Mask{1} << k) - 1; x != 0;
         x = detail::next_same_popcount(x, width)) {
      Mask expanded = 0;
      int pos = 0;
      for (Mask rest = within; rest; rest &= rest - 1, ++pos) {
        if (x & (Mask{1} << pos)) expanded |= rest & -rest;
      }
      if (visit(expanded)) return true;
    }
    return false;
  };

  std::optional<MinorWitness> found;
  subsets(contract_count, all, [&](Mask t) {
    if (dependent[t]) return false;
    std::vector<Mask> ds;
    subsets(delete_count, all & ~t, [&](Mask d) {
      if (ranks[all & ~d] == m.rank()) ds.push_back(d);
      return false;
    });
    std::vector<ElementSet> contracted_candidates;
    for (ElementSet c : m.circuits()) {
      ElementSet rest = c - ElementSet(t);
      if (!rest.empty()) contracted_candidates.push_back(rest);
    }
    const auto contracted = detail::minimal_members(contracted_candidates);
    for (Mask d : ds) {
      const Mask keep = all & ~t & ~d;
      std::vector<ElementSet> circuits;
      std::vector<int> histogram(n.size() + 1, 0);
      for (ElementSet c : contracted) {
        if (c.bits() & d) continue;
        circuits.emplace_back(detail::compress(c.bits(), keep));
        ++histogram[c.size()];
      }
      if (histogram != target_histogram) continue;
      ExplicitMatroid candidate = ExplicitMatroid::from_trusted(
          GroundSet(m.ground().names_of(ElementSet(keep))), std::move(circuits));
      auto iso = is_isomorphic(n, candidate);
      if (!iso) continue;
      const auto kept = ElementSet(keep).indices();
      MinorWitness w{ElementSet(d), ElementSet(t), {}};
      for (int image : *iso) w.embedding.push_back(kept[image]);
      found = std::move(w);
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace laminar
