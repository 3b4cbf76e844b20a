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

#include "laminar/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <type_traits>

#include "laminar/error.hpp"
#include "subset_tables.hpp"

namespace laminar {

using detail::Mask;

namespace {

std::vector<std::string> numbered(int n, int first = 1) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(first + i));
  return names;
}

}  // namespace

ExplicitMatroid uniform_matroid(int r, int n) {
  if (n < 0 || r < 0 || r > n || n > kMaxGroundSize) {
    throw Error(ErrorKind::kBadParams,
                "uniform matroid needs 0 <= r <= n, got r=" +
                    std::to_string(r) + " n=" + std::to_string(n));
  }
  std::vector<ElementSet> circuits;
  if (r < n) {
    for (Mask x = (Mask{1} << (r + 1)) - 1; x != 0;
         x = detail::next_same_popcount(x, n)) {
      circuits.emplace_back(x);
    }
  }
  return ExplicitMatroid::from_trusted(GroundSet(numbered(n)),
                                       std::move(circuits));
}

ExplicitMatroid circuit_matroid(int n) {
  if (n < 1) throw Error(ErrorKind::kBadParams, "a circuit needs n >= 1");
  return uniform_matroid(n - 1, n);
}

ExplicitMatroid free_matroid(int n) { return uniform_matroid(n, n); }

ExplicitMatroid fano_matroid() {
  const GroundSet ground(numbered(7));
  std::vector<ElementSet> lines;
  for (auto [a, b, c] : {std::tuple{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                         {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}) {
    lines.push_back(ElementSet::singleton(a - 1).with(b - 1).with(c - 1));
  }
  return from_independence_oracle(ground, [&](ElementSet x) {
    if (x.size() > 3) return false;
    return std::find(lines.begin(), lines.end(), x) == lines.end();
  });
}

ExplicitMatroid fano_dual_matroid() { return dual(fano_matroid()); }

ExplicitMatroid k4_cycle_matroid() {
  return build_matroid({"12", "13", "14", "23", "24", "34"},
                       {{"12", "13", "23"},
                        {"12", "14", "24"},
                        {"13", "14", "34"},
                        {"23", "24", "34"},
                        {"12", "23", "34", "14"},
                        {"12", "24", "34", "13"},
                        {"13", "23", "24", "14"}});
}

ExplicitMatroid standard_matroid(StandardKind kind, int first, int second) {
  switch (kind) {
    case StandardKind::kUniform: return uniform_matroid(first, second);
    case StandardKind::kCircuit: return circuit_matroid(first);
    case StandardKind::kFree: return free_matroid(first);
    case StandardKind::kEmpty: return ExplicitMatroid{};
    case StandardKind::kFano: return fano_matroid();
    case StandardKind::kFanoDual: return fano_dual_matroid();
  }
  throw Error(ErrorKind::kBadParams, "unknown matroid kind");
}

ExplicitMatroid build_yr(int r) {
  if (r < 3) throw Error(ErrorKind::kBadParams, "Y_r needs r >= 3");
  if (2 * r - 1 > kMaxGroundSize) {
    throw Error(ErrorKind::kBadParams, "Y_r too large for r=" + std::to_string(r));
  }
  std::vector<std::string> left{"p"};
  std::vector<std::string> right{"p"};
  for (int i = 1; i < r; ++i) {
    left.push_back(std::to_string(i));
    right.push_back(std::to_string(r - 1 + i));
  }
  const ExplicitMatroid c1 = relabel(circuit_matroid(r), left);
  const ExplicitMatroid c2 = relabel(circuit_matroid(r), right);
  ExplicitMatroid y = parallel_connection(c1, c2, c1.ground().index_of("p"),
                                          c2.ground().index_of("p"));
  while (y.rank() > r) y = truncate(y);
  return y;
}

LaminarPresentation nested_from_chain(const GroundSet& ground,
                                      const NestedChain& chain) {
  std::vector<CapacitatedSet> sets;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    ground.check_subset(chain[i]);
    if (chain[i].empty()) {
      throw Error(ErrorKind::kEmptyMemberSet, "chain members must be nonempty");
    }
    if (i > 0 && !chain[i - 1].is_subset_of(chain[i])) {
      throw Error(ErrorKind::kNotAChain,
                  ground.format(chain[i - 1]) + " is not contained in " +
                      ground.format(chain[i]));
    }
    const int cap = static_cast<int>(i) + 1;
    if (!sets.empty() && sets.back().members == chain[i]) {
      sets.back().capacity = cap;
    } else {
      sets.push_back({chain[i], cap});
    }
  }
  const ElementSet top = chain.empty() ? ElementSet{} : chain.back();
  const ElementSet rest = ground.all() - top;
  if (!rest.empty()) sets.push_back({rest, 0});
  return validate_presentation(ground, std::move(sets));
}

bool ConstructionScript::uses_direct_sum() const {
  for (const auto& step : steps) {
    if (std::holds_alternative<ScriptSum>(step.op)) return true;
  }
  return false;
}

LaminarPresentation run_script(const ConstructionScript& script) {
  std::map<std::string, LaminarPresentation> values;
  std::set<std::string> assigned;
  auto take = [&](const std::string& name) -> const LaminarPresentation& {
    auto it = values.find(name);
    if (it == values.end()) {
      throw Error(ErrorKind::kUndefinedName, "'" + name + "' is not defined");
    }
    return it->second;
  };
  for (const auto& step : script.steps) {
    if (!assigned.insert(step.name).second) {
      throw Error(ErrorKind::kBadParams, "'" + step.name + "' assigned twice");
    }
    LaminarPresentation value = std::visit(
        [&](const auto& op) -> LaminarPresentation {
          using Op = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<Op, ScriptEmpty>) {
            return validate_presentation(GroundSet{}, {});
          } else if constexpr (std::is_same_v<Op, ScriptColoop>) {
            return lam_add_coloop(take(op.source), op.id);
          } else if constexpr (std::is_same_v<Op, ScriptTruncate>) {
            return lam_truncate(take(op.source));
          } else {
            if (op.left == op.right) {
              throw Error(ErrorKind::kUndefinedName,
                          "'" + op.left + "' used twice in one direct sum");
            }
            LaminarPresentation sum =
                lam_direct_sum(take(op.left), take(op.right));
            values.erase(op.left);
            values.erase(op.right);
            return sum;
          }
        },
        step.op);
    values.emplace(step.name, std::move(value));
  }
  return take(script.result);
}

namespace {

class Deconstructor {
 public:
  ConstructionScript run(const LaminarPresentation& p) {
    script_.result = build(p, std::nullopt);
    return std::move(script_);
  }

 private:
  std::string emit(ScriptOp op) {
    std::string name = "m" + std::to_string(++counter_);
    script_.steps.push_back({name, std::move(op)});
    return name;
  }

  // Builds p's matroid on top of `base`, a rank-0 value (loops only), which
  // later truncations leave untouched.
  std::string build(const LaminarPresentation& p,
                    std::optional<std::string> base) {
    const ExplicitMatroid m = to_explicit(p);
    const GroundSet& ground = p.ground();
    std::string value = base ? *base : emit(ScriptEmpty{});
    for (int l : loop_set(m)) {
      value = emit(ScriptColoop{value, ground.name(l)});
      value = emit(ScriptTruncate{value});
    }
    bool first = true;
    for (ElementSet block : components(m)) {
      if (block.size() < 2) continue;
      const LaminarPresentation part = lam_restrict(p, block);
      if (first) {
        value = build_connected(part, value);
        first = false;
      } else {
        const std::string other = build_connected(part, std::nullopt);
        value = emit(ScriptSum{value, other});
      }
    }
    for (int c : coloop_set(m)) value = emit(ScriptColoop{value, ground.name(c)});
    return value;
  }

  // p is connected with at least two elements, hence loopless and its
  // canonical family contains the whole ground set.
  std::string build_connected(const LaminarPresentation& p,
                              std::optional<std::string> base) {
    const CanonicalPresentation canonical = canonicalize(p);
    const LaminarPresentation& pres = canonical.presentation();
    const auto top = pres.family().find(pres.ground().all());
    if (!top) {
      throw Error(ErrorKind::kNotCanonical,
                  "connected matroid without a spanning family member");
    }
    const ElementSet free = pres.family().free_part(*top);
    if (!free.empty()) {
      // M is the free extension of M \ e: add e as a coloop, then truncate.
      const int e = free.first();
      std::string value = build(lam_delete(pres, e), base);
      value = emit(ScriptColoop{value, pres.ground().name(e)});
      return emit(ScriptTruncate{value});
    }
    std::optional<std::string> value;
    int rank_sum = 0;
    for (int child : pres.family().children(*top)) {
      const ElementSet block = pres.set(child);
      rank_sum += lam_rank(pres, block);
      const LaminarPresentation part = lam_restrict(pres, block);
      if (!value) {
        value = build(part, base);
      } else {
        value = emit(ScriptSum{*value, build(part, std::nullopt)});
      }
    }
    for (int k = pres.capacity(*top); k < rank_sum; ++k) {
      value = emit(ScriptTruncate{*value});
    }
    return *value;
  }

  ConstructionScript script_;
  int counter_ = 0;
};

}  // namespace

ConstructionScript deconstruct(const CanonicalPresentation& p) {
  return Deconstructor().run(p.presentation());
}

ConstructionScript deconstruct(const LaminarPresentation& p) {
  if (!is_canonical(p)) {
    throw Error(ErrorKind::kNotCanonical, "presentation is not canonical");
  }
  return Deconstructor().run(p);
}

ExplicitMatroid binary_component(int n, const std::vector<int>& plan) {
  if (n < 2) throw Error(ErrorKind::kBadParams, "base circuit needs n >= 2");
  LaminarPresentation current =
      validate_presentation(GroundSet(numbered(n)), {{ElementSet::full(n), n - 1}});
  int next = n + 1;
  for (int base : plan) {
    if (base < 0 || base >= n) {
      throw Error(ErrorKind::kBadParams,
                  "plan entry " + std::to_string(base) + " is not a base element");
    }
    const CanonicalPresentation canonical = canonicalize(current);
    const int position = canonical.ground().index_of("e" + std::to_string(base + 1));
    current = lam_parallel_extend(canonical, position, "e" + std::to_string(next++));
  }
  return to_explicit(current);
}

ExplicitMatroid ternary_component(int n, int k) {
  if (n < 3 || k < 0 || k > n) {
    throw Error(ErrorKind::kBadParams,
                "need n >= 3 and 0 <= k <= n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  ExplicitMatroid current = circuit_matroid(n);
  int next = n + 1;
  for (int i = 0; i < k; ++i) {
    // The U_{2,4} basepoint is named after the circuit element it replaces so
    // the shared element keeps one identifier; it is deleted by the 2-sum.
    std::vector<std::string> names{"e" + std::to_string(i + 1)};
    for (int j = 0; j < 3; ++j) names.push_back("e" + std::to_string(next++));
    const ExplicitMatroid piece = relabel(uniform_matroid(2, 4), names);
    current = two_sum(current, piece,
                      current.ground().index_of("e" + std::to_string(i + 1)),
                      piece.ground().index_of(names.front()));
  }
  return current;
}

}  // namespace laminar
