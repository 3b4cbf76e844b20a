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

#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "laminar/error.hpp"

namespace oracle {

using laminar::ExplicitMatroid;
using Mask = ElementSet::Mask;

namespace {

int popcount(Mask x) { return __builtin_popcount(x); }

void sort_lex(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    // Lexicographic on sorted position lists.
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(),
                                        ib.end());
  });
}

}  // namespace

Indep from_circuits(const ExplicitMatroid& m) {
  std::vector<ElementSet> cs(m.circuits().begin(), m.circuits().end());
  return [cs](ElementSet x) {
    for (ElementSet c : cs) {
      if ((c.bits() & ~x.bits()) == 0) return false;
    }
    return true;
  };
}

Indep from_presentation(const laminar::LaminarPresentation& p) {
  std::vector<std::pair<Mask, int>> members;
  for (int i = 0; i < p.size(); ++i) {
    members.emplace_back(p.set(i).bits(), p.capacity(i));
  }
  return [members](ElementSet x) {
    for (auto [a, c] : members) {
      if (popcount(a & x.bits()) > c) return false;
    }
    return true;
  };
}

int rank(const Indep& indep, ElementSet x) {
  int best = 0;
  const Mask full = x.bits();
  for (Mask s = full;; s = (s - 1) & full) {
    if (popcount(s) > best && indep(ElementSet(s))) best = popcount(s);
    if (s == 0) break;
  }
  return best;
}

std::vector<ElementSet> circuits(int n, const Indep& indep) {
  std::vector<ElementSet> out;
  for (Mask x = 1; x < (Mask{1} << n); ++x) {
    if (indep(ElementSet(x))) continue;
    bool minimal = true;
    for (int e = 0; e < n && minimal; ++e) {
      if ((x >> e & 1) && !indep(ElementSet(x & ~(Mask{1} << e)))) minimal = false;
    }
    if (minimal) out.emplace_back(x);
  }
  sort_lex(out);
  return out;
}

ElementSet closure(int n, const Indep& indep, ElementSet x) {
  const int r = rank(indep, x);
  Mask out = x.bits();
  for (int e = 0; e < n; ++e) {
    if (rank(indep, ElementSet(x.bits() | Mask{1} << e)) == r) out |= Mask{1} << e;
  }
  return ElementSet(out);
}

std::vector<ElementSet> cyclic_flats(int n, const Indep& indep) {
  const auto cs = circuits(n, indep);
  std::vector<ElementSet> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (closure(n, indep, ElementSet(x)).bits() != x) continue;
    Mask covered = 0;
    for (ElementSet c : cs) {
      if ((c.bits() & ~x) == 0) covered |= c.bits();
    }
    if (covered == x) out.emplace_back(x);
  }
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto ia = a.indices();
    const auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(),
                                        ib.end());
  });
  return out;
}

std::vector<ElementSet> minor_circuits(const ExplicitMatroid& m, ElementSet del,
                                       ElementSet con) {
  const Indep base = from_circuits(m);
  const int rc = rank(base, con);
  const Mask keep = m.ground().all().bits() & ~del.bits() & ~con.bits();
  std::vector<int> positions;
  for (int i = 0; i < m.size(); ++i) {
    if (keep >> i & 1) positions.push_back(i);
  }
  Indep minor = [&, positions](ElementSet x) {
    Mask lifted = 0;
    for (int i : x) lifted |= Mask{1} << positions[i];
    return rank(base, ElementSet(lifted | con.bits())) - rc == x.size();
  };
  return circuits(static_cast<int>(positions.size()), minor);
}

std::vector<ElementSet> dual_circuits(const ExplicitMatroid& m) {
  const Indep base = from_circuits(m);
  const Mask all = m.ground().all().bits();
  const int r = rank(base, ElementSet(all));
  return circuits(m.size(), [&](ElementSet x) {
    return rank(base, ElementSet(all & ~x.bits())) == r;
  });
}

laminar::Weight max_weight(int n, const Indep& indep,
                           const std::vector<laminar::Weight>& weights) {
  laminar::Weight best(0);
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (!indep(ElementSet(x))) continue;
    laminar::Weight total(0);
    for (int i = 0; i < n; ++i) {
      if (x >> i & 1) total += weights[i];
    }
    best = std::max(best, total);
  }
  return best;
}

bool isomorphic(const ExplicitMatroid& a, const ExplicitMatroid& b) {
  if (a.size() != b.size() || a.circuits().size() != b.circuits().size()) {
    return false;
  }
  std::vector<Mask> target;
  for (ElementSet c : b.circuits()) target.push_back(c.bits());
  std::sort(target.begin(), target.end());
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Mask> image;
    for (ElementSet c : a.circuits()) {
      Mask m = 0;
      for (int e : c) m |= Mask{1} << perm[e];
      image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    if (image == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool same_circuits(const ExplicitMatroid& m,
                   const std::vector<ElementSet>& expected) {
  return std::vector<ElementSet>(m.circuits().begin(), m.circuits().end()) ==
         expected;
}

}  // namespace oracle

namespace gen {

using laminar::CapacitatedSet;
using laminar::ElementSet;
using laminar::ExplicitMatroid;
using laminar::LaminarPresentation;
using Mask = ElementSet::Mask;

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool compatible(Mask a, Mask b) {
  return (a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0;
}

bool fits(const std::vector<CapacitatedSet>& sets, Mask candidate) {
  for (const auto& s : sets) {
    if (s.members.bits() == candidate || !compatible(s.members.bits(), candidate)) {
      return false;
    }
  }
  return true;
}

Mask random_subset(Rng& rng, Mask within) {
  Mask out = 0;
  for (int i = 0; i < 32; ++i) {
    if ((within >> i & 1) && uniform(rng, 0, 1)) out |= Mask{1} << i;
  }
  return out;
}

}  // namespace

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

LaminarPresentation random_presentation(Rng& rng, int n) {
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<CapacitatedSet> sets;
  const int attempts = uniform(rng, 0, 2 * n + 1);
  for (int t = 0; t < attempts; ++t) {
    const Mask candidate = uniform(rng, 0, 4) == 0 ? all : random_subset(rng, all);
    if (candidate == 0 || !fits(sets, candidate)) continue;
    const int size = __builtin_popcount(candidate);
    sets.push_back({ElementSet(candidate), uniform(rng, 0, size)});
  }
  return laminar::validate_presentation(laminar::GroundSet(letters(n)),
                                        std::move(sets));
}

LaminarPresentation inflate(Rng& rng, const LaminarPresentation& p, int count) {
  auto sets = p.members();
  const Mask all = p.ground().all().bits();
  int added = 0;
  for (int tries = 0; added < count && tries < 1000; ++tries) {
    if (!sets.empty() && uniform(rng, 0, 1)) {
      // Inside an existing member at no smaller capacity.
      const auto& host = sets[uniform(rng, 0, static_cast<int>(sets.size()) - 1)];
      const Mask candidate = random_subset(rng, host.members.bits());
      if (candidate == 0 || !fits(sets, candidate)) continue;
      sets.push_back({ElementSet(candidate), host.capacity + uniform(rng, 0, 2)});
    } else {
      // Capacity at least the size, so never binding.
      const Mask candidate = random_subset(rng, all);
      if (candidate == 0 || !fits(sets, candidate)) continue;
      sets.push_back({ElementSet(candidate),
                      __builtin_popcount(candidate) + uniform(rng, 0, 2)});
    }
    ++added;
  }
  std::shuffle(sets.begin(), sets.end(), rng);
  return laminar::validate_presentation(p.ground(), std::move(sets));
}

laminar::ConstructionScript random_script(Rng& rng, int max_n, bool allow_sum) {
  struct Value {
    std::string name;
    int size = 0;
    int rank = 0;
  };
  laminar::ConstructionScript script;
  std::vector<Value> live;
  int counter = 0;
  int ids = 0;
  auto fresh = [&] { return "v" + std::to_string(++counter); };
  auto emit = [&](laminar::ScriptOp op) {
    const std::string name = fresh();
    script.steps.push_back({name, std::move(op)});
    return name;
  };
  live.push_back({emit(laminar::ScriptEmpty{}), 0, 0});
  const int steps = uniform(rng, 1, 14);
  for (int s = 0; s < steps; ++s) {
    const int pick = uniform(rng, 0, live.size() - 1);
    Value v = live[pick];
    const int choice = uniform(rng, 0, allow_sum ? 5 : 3);
    if (choice <= 1 && v.size < max_n) {
      v.name = emit(laminar::ScriptColoop{v.name, "x" + std::to_string(++ids)});
      ++v.size;
      ++v.rank;
      live[pick] = v;
    } else if (choice <= 3 && v.rank > 0) {
      v.name = emit(laminar::ScriptTruncate{v.name});
      --v.rank;
      live[pick] = v;
    } else if (choice == 4 && allow_sum) {
      live.push_back({emit(laminar::ScriptEmpty{}), 0, 0});
    } else if (choice == 5 && live.size() >= 2) {
      int other = uniform(rng, 0, live.size() - 2);
      if (other >= pick) ++other;
      const Value w = live[other];
      if (v.size + w.size > max_n) continue;
      const Value sum{emit(laminar::ScriptSum{v.name, w.name}), v.size + w.size,
                      v.rank + w.rank};
      live.erase(live.begin() + std::max(pick, other));
      live.erase(live.begin() + std::min(pick, other));
      live.push_back(sum);
    }
  }
  // Result is the largest live value.
  const auto best = std::max_element(
      live.begin(), live.end(),
      [](const Value& a, const Value& b) { return a.size < b.size; });
  script.result = best->name;
  return script;
}

ExplicitMatroid random_construction(Rng& rng, int max_n) {
  auto base = [&]() -> ExplicitMatroid {
    switch (uniform(rng, 0, 6)) {
      case 0: return laminar::build_yr(3);
      case 1: return laminar::k4_cycle_matroid();
      case 2: return laminar::circuit_matroid(uniform(rng, 2, 5));
      case 3: return laminar::free_matroid(uniform(rng, 1, 3));
      default: {
        const int n = uniform(rng, 1, 5);
        return laminar::uniform_matroid(uniform(rng, 0, n), n);
      }
    }
  };
  auto usable_point = [&](const ExplicitMatroid& m) -> int {
    const ElementSet bad = laminar::loop_set(m) | laminar::coloop_set(m);
    std::vector<int> ok;
    for (int i = 0; i < m.size(); ++i) {
      if (!bad.contains(i)) ok.push_back(i);
    }
    if (ok.empty()) return -1;
    return ok[uniform(rng, 0, static_cast<int>(ok.size()) - 1)];
  };
  ExplicitMatroid m = base();
  const int steps = uniform(rng, 1, 4);
  for (int s = 0; s < steps; ++s) {
    const ExplicitMatroid other = base();
    switch (uniform(rng, 0, 6)) {
      case 0:
        if (m.size() + other.size() <= max_n) m = laminar::direct_sum(m, other);
        break;
      case 1:
        if (m.rank() > 0) m = laminar::truncate(m);
        break;
      case 2: {
        const int p1 = usable_point(m);
        const int p2 = usable_point(other);
        if (p1 >= 0 && p2 >= 0 && m.size() + other.size() - 1 <= max_n) {
          m = laminar::parallel_connection(m, other, p1, p2);
        }
        break;
      }
      case 3: {
        const int p1 = usable_point(m);
        const int p2 = usable_point(other);
        if (p1 >= 0 && p2 >= 0 && m.size() >= 3 && other.size() >= 3 &&
            m.size() + other.size() - 2 <= max_n) {
          m = laminar::two_sum(m, other, p1, p2);
        }
        break;
      }
      case 4:
        m = laminar::dual(m);
        break;
      default:
        if (m.size() > 0) {
          const ElementSet e = ElementSet::singleton(uniform(rng, 0, m.size() - 1));
          m = uniform(rng, 0, 1) ? laminar::minor(m, e, {}) : laminar::minor(m, {}, e);
        }
        break;
    }
  }
  while (m.size() > max_n) {
    m = laminar::minor(m, ElementSet::singleton(m.size() - 1), {});
  }
  return m;
}

std::vector<Named> corpus(int random_count, unsigned seed) {
  using namespace laminar;
  std::vector<Named> out;
  auto add = [&](std::string name, ExplicitMatroid m) {
    out.push_back({std::move(name), std::move(m)});
  };
  add("Y_3", build_yr(3));
  add("Y_4", build_yr(4));
  for (int n = 0; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      add("U_{" + std::to_string(r) + "," + std::to_string(n) + "}",
          uniform_matroid(r, n));
    }
  }
  add("U_{3,7}", uniform_matroid(3, 7));
  add("U_{4,8}", uniform_matroid(4, 8));
  add("F_7", fano_matroid());
  add("F_7*", fano_dual_matroid());
  add("M(K_4)", k4_cycle_matroid());
  const std::vector<Named> small{{"Y_3", build_yr(3)},
                                 {"U_{2,4}", uniform_matroid(2, 4)},
                                 {"U_{1,3}", uniform_matroid(1, 3)},
                                 {"U_{2,3}", uniform_matroid(2, 3)},
                                 {"C_3", circuit_matroid(3)},
                                 {"M(K_4)", k4_cycle_matroid()}};
  for (const auto& a : small) {
    for (const auto& b : small) {
      if (a.matroid.size() + b.matroid.size() <= 8) {
        ExplicitMatroid sum = direct_sum(a.matroid, b.matroid);
        add(a.name + "+" + b.name, sum);
        if (sum.rank() > 0) add("T(" + a.name + "+" + b.name + ")", truncate(sum));
      }
      if (a.matroid.size() + b.matroid.size() - 1 <= 8) {
        add("P(" + a.name + "," + b.name + ")",
            parallel_connection(a.matroid, b.matroid, 0, 0));
      }
      if (a.matroid.size() + b.matroid.size() - 2 <= 8) {
        add("S2(" + a.name + "," + b.name + ")",
            two_sum(a.matroid, b.matroid, 0, 0));
      }
    }
    add(a.name + "*", dual(a.matroid));
    for (int e = 0; e < a.matroid.size(); ++e) {
      const ElementSet x = ElementSet::singleton(e);
      add(a.name + "\\" + a.matroid.ground().name(e), minor(a.matroid, x, {}));
      add(a.name + "/" + a.matroid.ground().name(e), minor(a.matroid, {}, x));
    }
  }
  for (int r = 2; r <= 4; ++r) {
    add("T(C_" + std::to_string(r) + "+C_" + std::to_string(r) + ")",
        [&] {
          ExplicitMatroid m = direct_sum(circuit_matroid(r), circuit_matroid(r));
          while (m.rank() > r) m = truncate(m);
          return m;
        }());
  }
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) {
    add("random#" + std::to_string(i), random_construction(rng, 8));
  }
  return out;
}

}  // namespace gen
