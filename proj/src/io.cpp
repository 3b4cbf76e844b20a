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

#include "laminar/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "laminar/error.hpp"

namespace laminar {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": " + message);
}

// Splits on whitespace, keeping a braced set as one token with inner
// whitespace removed. Comments and blank lines are dropped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::string current;
    bool in_set = false;
    for (char ch : raw) {
      const bool space = ch == ' ' || ch == '\t' || ch == '\r';
      if (in_set) {
        if (!space) current += ch;
        if (ch == '}') in_set = false;
        continue;
      }
      if (space) {
        if (!current.empty()) line.tokens.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (ch == '{') in_set = true;
      current += ch;
    }
    if (in_set) fail(number, "unterminated set '" + current + "'");
    if (!current.empty()) line.tokens.push_back(std::move(current));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

int parse_count(const std::string& token, int line) {
  int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 0) {
    fail(line, "expected a nonnegative integer, got '" + token + "'");
  }
  return value;
}

ElementSet parse_set(const GroundSet& ground, const std::string& token,
                     int line) {
  if (token.size() < 2 || token.front() != '{' || token.back() != '}') {
    fail(line, "expected a set {id,...}, got '" + token + "'");
  }
  ElementSet out;
  const std::string body = token.substr(1, token.size() - 2);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string id = body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto index = ground.find(id);
    if (!index) fail(line, "unknown element '" + id + "'");
    if (out.contains(*index)) fail(line, "element '" + id + "' repeated in set");
    out = out.with(*index);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

GroundSet parse_ground(const Line& line) {
  std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
  try {
    return GroundSet(std::move(names));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kTooLarge) throw;
    throw Error(e.kind(), "line " + std::to_string(line.number) + ": " +
                              e.message());
  }
}

void require_identifier(const std::string& token, int line) {
  if (!is_valid_identifier(token)) fail(line, "bad identifier '" + token + "'");
}

std::string indent(const std::string& block) {
  std::string out;
  std::size_t start = 0;
  while (start < block.size()) {
    std::size_t end = block.find('\n', start);
    if (end == std::string::npos) end = block.size();
    out += "  ";
    out.append(block, start, end - start);
    out += '\n';
    start = end + 1;
  }
  return out;
}

std::string ground_line(const GroundSet& ground) {
  std::string out = "ground";
  for (const auto& name : ground.names()) out += " " + name;
  return out + "\n";
}

}  // namespace

ExplicitMatroid parse_ckt(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<ElementSet> circuits;
  std::optional<std::pair<int, int>> asserted;  // (rank, line)
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens[0];
    if (head == "ground") {
      if (ground) fail(line.number, "second ground line");
      ground = parse_ground(line);
    } else if (head == "circuit") {
      if (!ground) fail(line.number, "circuit before ground line");
      if (line.tokens.size() != 2) fail(line.number, "expected circuit {id,...}");
      const ElementSet c = parse_set(*ground, line.tokens[1], line.number);
      if (c.empty()) fail(line.number, "empty circuit");
      circuits.push_back(c);
    } else if (head == "rank") {
      if (line.tokens.size() != 2) fail(line.number, "expected rank k");
      if (asserted) fail(line.number, "second rank line");
      asserted = {parse_count(line.tokens[1], line.number), line.number};
    } else {
      fail(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!ground) fail(1, "missing ground line");
  ExplicitMatroid m = build_matroid(std::move(*ground), std::move(circuits));
  if (asserted && asserted->first != m.rank()) {
    fail(asserted->second, "asserted rank " + std::to_string(asserted->first) +
                               " but the circuits give rank " +
                               std::to_string(m.rank()));
  }
  return m;
}

LaminarPresentation parse_lam(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<CapacitatedSet> sets;
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens[0];
    if (head == "ground") {
      if (ground) fail(line.number, "second ground line");
      ground = parse_ground(line);
    } else if (head == "cap") {
      if (!ground) fail(line.number, "cap before ground line");
      if (line.tokens.size() != 3) fail(line.number, "expected cap {id,...} k");
      const ElementSet members = parse_set(*ground, line.tokens[1], line.number);
      if (members.empty()) {
        throw Error(ErrorKind::kEmptyMemberSet,
                    "line " + std::to_string(line.number) + ": empty member set");
      }
      const std::string& k = line.tokens[2];
      if (!k.empty() && k[0] == '-') {
        throw Error(ErrorKind::kNegativeCapacity,
                    "line " + std::to_string(line.number) + ": capacity " + k);
      }
      sets.push_back({members, parse_count(k, line.number)});
    } else {
      fail(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!ground) fail(1, "missing ground line");
  require_desk_scale(ground->size(), "presentation");
  return validate_presentation(std::move(*ground), std::move(sets));
}

ConstructionScript parse_mbs(std::string_view text) {
  ConstructionScript script;
  bool done = false;
  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (done) fail(line.number, "text after result line");
    if (t[0] == "result") {
      if (t.size() != 2) fail(line.number, "expected result name");
      require_identifier(t[1], line.number);
      script.result = t[1];
      done = true;
      continue;
    }
    if (t.size() < 3 || t[1] != "=") {
      fail(line.number, "expected name = operation");
    }
    require_identifier(t[0], line.number);
    const std::string& op = t[2];
    const std::size_t args = t.size() - 3;
    ScriptStep step{t[0], ScriptEmpty{}};
    if (op == "empty" && args == 0) {
      step.op = ScriptEmpty{};
    } else if (op == "coloop" && args == 2) {
      require_identifier(t[3], line.number);
      require_identifier(t[4], line.number);
      step.op = ScriptColoop{t[3], t[4]};
    } else if (op == "truncate" && args == 1) {
      require_identifier(t[3], line.number);
      step.op = ScriptTruncate{t[3]};
    } else if (op == "dsum" && args == 2) {
      require_identifier(t[3], line.number);
      require_identifier(t[4], line.number);
      step.op = ScriptSum{t[3], t[4]};
    } else {
      fail(line.number, "bad operation '" + op + "' with " +
                            std::to_string(args) + " argument(s)");
    }
    script.steps.push_back(std::move(step));
  }
  if (!done) fail(1, "missing result line");
  return script;
}

std::string format_ckt(const ExplicitMatroid& m) {
  std::string out = ground_line(m.ground());
  out += "rank " + std::to_string(m.rank()) + "\n";
  for (ElementSet c : m.circuits()) {
    out += "circuit " + m.ground().format(c) + "\n";
  }
  return out;
}

std::string format_lam(const LaminarPresentation& p) {
  std::string out = ground_line(p.ground());
  for (int i = 0; i < p.size(); ++i) {
    out += "cap " + p.ground().format(p.set(i)) + " " +
           std::to_string(p.capacity(i)) + "\n";
  }
  return out;
}

std::string format_mbs(const ConstructionScript& script) {
  std::string out;
  for (const auto& step : script.steps) {
    out += step.name + " = ";
    if (std::holds_alternative<ScriptEmpty>(step.op)) {
      out += "empty";
    } else if (const auto* c = std::get_if<ScriptColoop>(&step.op)) {
      out += "coloop " + c->source + " " + c->id;
    } else if (const auto* t = std::get_if<ScriptTruncate>(&step.op)) {
      out += "truncate " + t->source;
    } else {
      const auto& s = std::get<ScriptSum>(step.op);
      out += "dsum " + s.left + " " + s.right;
    }
    out += "\n";
  }
  return out + "result " + script.result + "\n";
}

std::string format_laminar_verdict(const ExplicitMatroid& m,
                                   const LaminarVerdict& v) {
  if (v.is_laminar) {
    return "laminar: yes\n" + indent(format_lam(v.presentation->presentation()));
  }
  std::string out = "laminar: no\n";
  if (v.violating_pair) {
    out += "  circuit " + m.ground().format(v.violating_pair->first) + "\n";
    out += "  circuit " + m.ground().format(v.violating_pair->second) + "\n";
  }
  return out;
}

std::string format_nested_verdict(const ExplicitMatroid& m,
                                  const NestedVerdict& v) {
  std::string out = v.is_nested ? "nested: yes\n" : "nested: no\n";
  if (v.is_nested) {
    for (ElementSet f : v.chain) out += "  flat " + m.ground().format(f) + "\n";
  } else if (v.incomparable) {
    out += "  flat " + m.ground().format(v.incomparable->first) + "\n";
    out += "  flat " + m.ground().format(v.incomparable->second) + "\n";
  }
  return out;
}

std::string format_dual_laminar_verdict(const ExplicitMatroid& m,
                                        const DualLaminarVerdict& v) {
  std::string out = v.is_dual_laminar ? "dual-laminar: yes\n"
                                      : "dual-laminar: no\n";
  if (!v.reason.empty()) out += "  reason " + v.reason + "\n";
  for (const auto& c : v.components) {
    out += "  component " + m.ground().format(c.elements);
    switch (c.kind) {
      case ComponentShape::Kind::kNested:
        out += " nested";
        break;
      case ComponentShape::Kind::kTruncatedSum:
        out += " truncation " + std::to_string(c.truncated_rank) + " of " +
               m.ground().format(c.side1) + " " + std::to_string(c.rank1) +
               " + " + m.ground().format(c.side2) + " " +
               std::to_string(c.rank2);
        break;
      case ComponentShape::Kind::kNeither:
        out += " neither";
        break;
    }
    out += "\n";
  }
  return out;
}

std::string format_minor_witness(const ExplicitMatroid& m,
                                 const ExplicitMatroid& n,
                                 const MinorWitness& w) {
  std::string out = "delete " + m.ground().format(w.deleted) + "\n";
  out += "contract " + m.ground().format(w.contracted) + "\n";
  out += "map";
  for (int i = 0; i < n.size(); ++i) {
    out += " " + n.ground().name(i) + "=" + m.ground().name(w.embedding[i]);
  }
  return out + "\n";
}

std::string format_minor_free_verdict(std::string_view label,
                                      const ExplicitMatroid& m,
                                      const MinorFreeVerdict& v,
                                      const std::vector<std::string>& excluded) {
  std::string out(label);
  if (v.holds) {
    out += ": yes\n  no-minor";
    for (const auto& name : excluded) out += " " + name;
    return out + "\n";
  }
  out += ": no\n  minor " + v.hit->name + "\n";
  return out + indent(format_minor_witness(m, v.hit->minor, v.hit->witness));
}

std::string format_classification(const ExplicitMatroid& m,
                                  const Classification& c) {
  return format_laminar_verdict(m, c.laminar) +
         format_nested_verdict(m, c.nested) +
         format_dual_laminar_verdict(m, c.dual_laminar) +
         format_minor_free_verdict("binary-laminar", m, c.binary_laminar,
                                   {"Y_3", "U_{2,4}"}) +
         format_minor_free_verdict("ternary-laminar", m, c.ternary_laminar,
                                   {"U_{2,5}", "U_{3,5}", "Y_3"});
}

Weight parse_weight(std::string_view text) {
  auto integer = [&](std::string_view part) {
    long long value = 0;
    const char* first = part.data();
    const char* last = first + part.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (part.empty() || ec != std::errc{} || ptr != last) {
      throw Error(ErrorKind::kParseError,
                  "bad weight '" + std::string(text) + "'");
    }
    return value;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Weight(integer(text));
  const long long den = integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorKind::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Weight(integer(text.substr(0, slash)), den);
}

std::string format_weight(const Weight& w) {
  std::string out = std::to_string(w.numerator());
  if (w.denominator() != 1) out += "/" + std::to_string(w.denominator());
  return out;
}

}  // namespace laminar
