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

// Text formats:
//
//   .ckt   ground a b c        .lam   ground a b c        .mbs   m1 = empty
//          circuit {a,b}              cap {a,b} 1                m2 = coloop m1 a
//          rank 1                     cap {a,b,c} 2              m3 = truncate m2
//                                                                result m3
//
// `#` starts a comment. Sets are written {x,y,z} with no spaces required.

#ifndef LAMINAR_IO_HPP_
#define LAMINAR_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "laminar/constructions.hpp"
#include "laminar/matroid.hpp"
#include "laminar/presentation.hpp"
#include "laminar/recognition.hpp"

namespace laminar {

// Parsers throw kParseError with a "line N:" prefix for syntax problems;
// semantic failures keep their own kind.
ExplicitMatroid parse_ckt(std::string_view text);
LaminarPresentation parse_lam(std::string_view text);
ConstructionScript parse_mbs(std::string_view text);

std::string format_ckt(const ExplicitMatroid& m);
std::string format_lam(const LaminarPresentation& p);
std::string format_mbs(const ConstructionScript& script);

// Verdict blocks: a "<label>: yes|no" header followed by certificate lines
// indented by two spaces.
std::string format_laminar_verdict(const ExplicitMatroid& m,
                                   const LaminarVerdict& v);
std::string format_nested_verdict(const ExplicitMatroid& m,
                                  const NestedVerdict& v);
std::string format_dual_laminar_verdict(const ExplicitMatroid& m,
                                        const DualLaminarVerdict& v);
// `excluded` lists the names that were searched, for the positive case.
std::string format_minor_free_verdict(std::string_view label,
                                      const ExplicitMatroid& m,
                                      const MinorFreeVerdict& v,
                                      const std::vector<std::string>& excluded);
std::string format_classification(const ExplicitMatroid& m,
                                  const Classification& c);
// Certificate lines for N as a minor of M.
std::string format_minor_witness(const ExplicitMatroid& m,
                                 const ExplicitMatroid& n,
                                 const MinorWitness& w);

// Integer or p/q.
Weight parse_weight(std::string_view text);
std::string format_weight(const Weight& w);

}  // namespace laminar

#endif  // LAMINAR_IO_HPP_
