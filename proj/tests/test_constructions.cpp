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

#include <doctest.h>

#include <random>

#include "laminar/constructions.hpp"
#include "laminar/error.hpp"
#include "laminar/recognition.hpp"
#include "support.hpp"

using namespace laminar;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParseError;
}

struct Counts {
  int empty = 0, coloop = 0, truncate = 0, sum = 0;
};

Counts count(const ConstructionScript& s) {
  Counts c;
  for (const auto& step : s.steps) {
    if (std::holds_alternative<ScriptEmpty>(step.op)) ++c.empty;
    if (std::holds_alternative<ScriptColoop>(step.op)) ++c.coloop;
    if (std::holds_alternative<ScriptTruncate>(step.op)) ++c.truncate;
    if (std::holds_alternative<ScriptSum>(step.op)) ++c.sum;
  }
  return c;
}

ConstructionScript script(std::vector<ScriptStep> steps, std::string result) {
  return {std::move(steps), std::move(result)};
}

}  // namespace

TEST_CASE("standard matroids") {
  const ExplicitMatroid u24 = standard_matroid(StandardKind::kUniform, 2, 4);
  CHECK(u24.circuits().size() == 4);
  for (ElementSet c : u24.circuits()) CHECK(c.size() == 3);
  CHECK(circuit_matroid(4) == uniform_matroid(3, 4));
  CHECK(free_matroid(3).circuits().empty());
  CHECK(standard_matroid(StandardKind::kEmpty).size() == 0);
  CHECK(fano_matroid().circuits().size() == 14);
  CHECK(fano_dual_matroid().rank() == 4);
  CHECK(kind_of([] { uniform_matroid(5, 4); }) == ErrorKind::kBadParams);
  // M(K_4): 4 triangles and 3 squares.
  CHECK(k4_cycle_matroid().circuits().size() == 7);
  CHECK(k4_cycle_matroid().rank() == 3);
}

TEST_CASE("Y_r") {
  const ExplicitMatroid y3 = build_yr(3);
  CHECK(y3 == build_matroid({"p", "1", "2", "3", "4"},
                            {{"p", "1", "2"}, {"p", "3", "4"}, {"1", "2", "3", "4"}}));
  const ExplicitMatroid y4 = build_yr(4);
  CHECK(y4.size() == 7);
  CHECK(y4.rank() == 4);
  // Non-spanning circuits are exactly the two r-circuits through p.
  std::vector<ElementSet> small;
  for (ElementSet c : y4.circuits()) {
    if (c.size() <= y4.rank()) small.push_back(c);
  }
  CHECK(small == std::vector<ElementSet>{y4.ground().set_of({"p", "1", "2", "3"}),
                                         y4.ground().set_of({"p", "4", "5", "6"})});
  CHECK(kind_of([] { build_yr(2); }) == ErrorKind::kBadParams);
}

TEST_CASE("nested_from_chain") {
  const GroundSet abc({"a", "b", "c"});
  const LaminarPresentation p = nested_from_chain(abc, {abc.set_of({"a", "b"})});
  CHECK(p == validate_presentation(abc, {{abc.set_of({"c"}), 0},
                                         {abc.set_of({"a", "b"}), 1}}));
  const ExplicitMatroid m = to_explicit(p);
  CHECK(loop_set(m) == abc.set_of({"c"}));
  CHECK(m.rank() == 1);

  const GroundSet abcd({"a", "b", "c", "d"});
  const LaminarPresentation q =
      nested_from_chain(abcd, {abcd.set_of({"a"}), abcd.all()});
  CHECK(to_explicit(q).rank() == 2);
  CHECK(is_nested(to_explicit(q)).is_nested);

  CHECK(kind_of([&] {
          nested_from_chain(abcd, {abcd.set_of({"a", "b"}), abcd.set_of({"c"})});
        }) == ErrorKind::kNotAChain);
  CHECK(kind_of([&] { nested_from_chain(abcd, {ElementSet{}}); }) ==
        ErrorKind::kEmptyMemberSet);
}

TEST_CASE("run_script") {
  const ConstructionScript u23 =
      script({{"m1", ScriptEmpty{}},
              {"m2", ScriptColoop{"m1", "a"}},
              {"m3", ScriptColoop{"m2", "b"}},
              {"m4", ScriptColoop{"m3", "c"}},
              {"m5", ScriptTruncate{"m4"}}},
             "m5");
  CHECK(to_explicit(run_script(u23)) ==
        relabel(uniform_matroid(2, 3), {"a", "b", "c"}));
  CHECK_FALSE(u23.uses_direct_sum());

  std::vector<ScriptStep> steps{{"l0", ScriptEmpty{}},
                                {"l1", ScriptColoop{"l0", "a"}},
                                {"l2", ScriptColoop{"l1", "b"}},
                                {"l3", ScriptTruncate{"l2"}},
                                {"r0", ScriptEmpty{}},
                                {"r1", ScriptColoop{"r0", "c"}},
                                {"r2", ScriptColoop{"r1", "d"}},
                                {"r3", ScriptTruncate{"r2"}},
                                {"s", ScriptSum{"l3", "r3"}}};
  const ExplicitMatroid sum = to_explicit(run_script(script(steps, "s")));
  CHECK(sum == build_matroid({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
  steps.push_back({"t", ScriptTruncate{"s"}});
  CHECK(to_explicit(run_script(script(steps, "t"))) ==
        relabel(uniform_matroid(1, 4), {"a", "b", "c", "d"}));

  CHECK(kind_of([] { run_script(script({{"m1", ScriptTruncate{"x"}}}, "m1")); }) ==
        ErrorKind::kUndefinedName);
  CHECK(kind_of([] {
          run_script(script({{"m1", ScriptEmpty{}}, {"m1", ScriptEmpty{}}}, "m1"));
        }) == ErrorKind::kBadParams);
  // Operands of a sum are consumed.
  CHECK(kind_of([] {
          run_script(script({{"a", ScriptEmpty{}},
                             {"b", ScriptEmpty{}},
                             {"c", ScriptSum{"a", "b"}},
                             {"d", ScriptTruncate{"a"}}},
                            "d"));
        }) == ErrorKind::kUndefinedName);
  CHECK(kind_of([] {
          run_script(script({{"a", ScriptEmpty{}}, {"b", ScriptTruncate{"a"}}}, "b"));
        }) == ErrorKind::kRankZero);
  CHECK(kind_of([] {
          run_script(script({{"a", ScriptEmpty{}},
                             {"b", ScriptColoop{"a", "x"}},
                             {"c", ScriptColoop{"b", "x"}}},
                            "c"));
        }) == ErrorKind::kDuplicateElement);
}

TEST_CASE("deconstruct") {
  const std::vector<std::string> abc{"a", "b", "c"};
  const ConstructionScript u23 =
      deconstruct(canonicalize(validate_presentation(abc, {{abc, 2}})));
  const Counts c = count(u23);
  CHECK(c.empty == 1);
  CHECK(c.coloop == 3);
  CHECK(c.truncate == 1);
  CHECK(c.sum == 0);
  CHECK(to_explicit(run_script(u23)) == relabel(uniform_matroid(2, 3), abc));

  const std::vector<std::string> five{"a", "b", "c", "d", "e"};
  const LaminarPresentation two =
      validate_presentation(five, {{{"a", "b"}, 1}, {{"c", "d", "e"}, 2}});
  const ConstructionScript s = deconstruct(two);
  CHECK(count(s).sum == 1);
  CHECK(to_explicit(run_script(s)) == to_explicit(two));

  const LaminarPresentation loop = validate_presentation({"a"}, {{{"a"}, 0}});
  const ConstructionScript l = deconstruct(loop);
  CHECK(l.steps.size() == 3);
  CHECK(std::get<ScriptColoop>(l.steps[1].op).id == "a");
  CHECK(std::holds_alternative<ScriptTruncate>(l.steps[2].op));

  CHECK(kind_of([&] {
          deconstruct(validate_presentation(
              abc, {{{"a", "b"}, 1}, {{"a", "b", "c"}, 3}}));
        }) == ErrorKind::kNotCanonical);

  std::mt19937 rng(61);
  for (int t = 0; t < 150; ++t) {
    const CanonicalPresentation p =
        canonicalize(gen::random_presentation(rng, 1 + t % 8));
    const ConstructionScript back = deconstruct(p);
    REQUIRE(to_explicit(run_script(back)) == to_explicit(p.presentation()));
    if (is_nested(to_explicit(p.presentation())).is_nested) {
      REQUIRE_FALSE(back.uses_direct_sum());
    }
  }
}

TEST_CASE("random scripts stay laminar") {
  std::mt19937 rng(67);
  for (int t = 0; t < 100; ++t) {
    const ConstructionScript s = gen::random_script(rng, 8, t % 2 == 0);
    const ExplicitMatroid m = to_explicit(run_script(s));
    REQUIRE(is_laminar(m).is_laminar);
    if (!s.uses_direct_sum()) REQUIRE(is_nested(m).is_nested);
  }
}

TEST_CASE("binary components") {
  CHECK(binary_component(4, {}) == circuit_matroid(4));
  const ExplicitMatroid once = binary_component(3, {0});
  CHECK(once.size() == 4);
  CHECK(classify_binary_laminar(once).holds);
  CHECK(is_laminar(once).is_laminar);
  CHECK(kind_of([] { binary_component(3, {3}); }) == ErrorKind::kBadParams);
  std::mt19937 rng(71);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int> plan;
    for (int k = static_cast<int>(rng() % 4); k > 0; --k) plan.push_back(rng() % n);
    const ExplicitMatroid m = binary_component(n, plan);
    REQUIRE(m.size() == n + static_cast<int>(plan.size()));
    REQUIRE(is_connected(m));
    REQUIRE(classify_binary_laminar(m).holds);
  }
}

TEST_CASE("ternary components") {
  CHECK(ternary_component(3, 0) == circuit_matroid(3));
  const ExplicitMatroid one = ternary_component(3, 1);
  CHECK(one.size() == 5);
  CHECK(one.rank() == 3);
  CHECK(classify_ternary_laminar(one).holds);
  CHECK(kind_of([] { ternary_component(2, 0); }) == ErrorKind::kBadParams);
  for (int n = 3; n <= 5; ++n) {
    for (int k = 0; k <= n && n + 2 * k <= 9; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const ExplicitMatroid m = ternary_component(n, k);
      REQUIRE(m.size() == n + 2 * k);
      REQUIRE(is_connected(m));
      REQUIRE(classify_ternary_laminar(m).holds);
    }
  }
}
