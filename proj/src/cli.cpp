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

#include "laminar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "laminar/constructions.hpp"
#include "laminar/error.hpp"
#include "laminar/io.hpp"
#include "laminar/recognition.hpp"

namespace laminar {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FileKind { kCircuits, kPresentation, kScript };

FileKind kind_of(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".ckt")) return FileKind::kCircuits;
  if (ends_with(".lam")) return FileKind::kPresentation;
  if (ends_with(".mbs")) return FileKind::kScript;
  throw UsageError("'" + path + "' has no .ckt, .lam or .mbs extension");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty item in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

// Restores the global cap when a command finishes.
class CapGuard {
 public:
  CapGuard() : saved_(desk_scale_cap()) {}
  ~CapGuard() { set_desk_scale_cap(saved_); }
  CapGuard(const CapGuard&) = delete;
  CapGuard& operator=(const CapGuard&) = delete;

 private:
  int saved_;
};

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  ExplicitMatroid load_matroid(const std::string& path) {
    switch (kind_of(path)) {
      case FileKind::kCircuits: return parse_ckt(slurp(path));
      case FileKind::kPresentation: return to_explicit(parse_lam(slurp(path)));
      case FileKind::kScript:
        return to_explicit(run_script(parse_mbs(slurp(path))));
    }
    throw UsageError("unreachable");
  }

  // Canonical presentation of the input, or nullopt after printing the
  // non-laminar verdict.
  std::optional<CanonicalPresentation> load_canonical(const std::string& path) {
    if (kind_of(path) == FileKind::kPresentation) {
      return canonicalize(parse_lam(slurp(path)));
    }
    const ExplicitMatroid m = load_matroid(path);
    LaminarVerdict v = is_laminar(m);
    if (!v.is_laminar) {
      out_ << format_laminar_verdict(m, v);
      return std::nullopt;
    }
    return std::move(v.presentation);
  }

  int validate(const std::string& path) {
    switch (kind_of(path)) {
      case FileKind::kCircuits: {
        const ExplicitMatroid m = parse_ckt(slurp(path));
        out_ << "valid: " << m.size() << " elements, rank " << m.rank() << ", "
             << m.circuits().size() << " circuits\n";
        break;
      }
      case FileKind::kPresentation: {
        const LaminarPresentation p = parse_lam(slurp(path));
        out_ << "valid: " << p.ground().size() << " elements, rank "
             << lam_rank(p, p.ground().all()) << ", " << p.size() << " sets\n";
        break;
      }
      case FileKind::kScript: {
        const LaminarPresentation p = run_script(parse_mbs(slurp(path)));
        out_ << "valid: " << p.ground().size() << " elements, rank "
             << lam_rank(p, p.ground().all()) << "\n";
        break;
      }
    }
    return kExitOk;
  }

  int canon(const std::string& path) {
    auto c = load_canonical(path);
    if (!c) return kExitNo;
    out_ << format_lam(c->presentation());
    return kExitOk;
  }

  int explicit_form(const std::string& path) {
    out_ << format_ckt(load_matroid(path));
    return kExitOk;
  }

  int laminar(const std::string& path) {
    const ExplicitMatroid m = load_matroid(path);
    const LaminarVerdict v = is_laminar(m);
    out_ << format_laminar_verdict(m, v);
    return v.is_laminar ? kExitOk : kExitNo;
  }

  int take_minor(const std::string& path, const std::string& del,
                 const std::string& con) {
    const std::vector<std::string> dels = del.empty() ? std::vector<std::string>{}
                                                      : split_list(del);
    const std::vector<std::string> cons = con.empty() ? std::vector<std::string>{}
                                                      : split_list(con);
    for (const auto& d : dels) {
      if (std::find(cons.begin(), cons.end(), d) != cons.end()) {
        throw Error(ErrorKind::kOverlappingSets,
                    "'" + d + "' both deleted and contracted");
      }
    }
    auto lookup = [](const GroundSet& ground, const std::string& id) {
      const auto i = ground.find(id);
      if (!i) throw UsageError("unknown element '" + id + "'");
      return *i;
    };
    if (kind_of(path) == FileKind::kPresentation) {
      LaminarPresentation p = parse_lam(slurp(path));
      for (const auto& id : dels) p = lam_delete(p, lookup(p.ground(), id));
      for (const auto& id : cons) p = lam_contract(p, lookup(p.ground(), id));
      out_ << format_lam(p);
      return kExitOk;
    }
    const ExplicitMatroid m = load_matroid(path);
    ElementSet d;
    ElementSet c;
    for (const auto& id : dels) d = d.with(lookup(m.ground(), id));
    for (const auto& id : cons) c = c.with(lookup(m.ground(), id));
    out_ << format_ckt(minor(m, d, c));
    return kExitOk;
  }

  int classify_all(const std::string& path) {
    const ExplicitMatroid m = load_matroid(path);
    out_ << format_classification(m, classify(m));
    return kExitOk;
  }

  int construct(const std::string& path) {
    if (kind_of(path) != FileKind::kScript) {
      throw UsageError("construct expects a .mbs script, got '" + path + "'");
    }
    out_ << format_lam(run_script(parse_mbs(slurp(path))));
    return kExitOk;
  }

  int deconstruct_input(const std::string& path) {
    auto c = load_canonical(path);
    if (!c) return kExitNo;
    out_ << format_mbs(deconstruct(*c));
    return kExitOk;
  }

  int witness(const std::string& path) {
    const ExplicitMatroid m = load_matroid(path);
    const auto w = excluded_minor_witness(m);
    if (!w) {
      out_ << "excluded-minor: none\n";
      return kExitNo;
    }
    out_ << "excluded-minor: Y_" << w->r << "\n";
    std::istringstream lines(format_minor_witness(m, build_yr(w->r), w->witness));
    for (std::string line; std::getline(lines, line);) out_ << "  " << line << "\n";
    return kExitOk;
  }

  int maxweight(const std::string& path, const std::string& spec) {
    auto c = load_canonical(path);
    if (!c) return kExitNo;
    const LaminarPresentation& p = c->presentation();
    std::vector<Weight> weights(p.ground().size(), Weight(0));
    std::vector<bool> seen(p.ground().size(), false);
    for (const auto& item : split_list(spec)) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw UsageError("weight '" + item + "' is not id=value");
      }
      const std::string id = item.substr(0, eq);
      const auto i = p.ground().find(id);
      if (!i) throw UsageError("unknown element '" + id + "' in weights");
      if (seen[*i]) throw UsageError("element '" + id + "' weighted twice");
      seen[*i] = true;
      try {
        weights[*i] = parse_weight(item.substr(eq + 1));
      } catch (const Error& e) {
        throw UsageError(e.message());
      }
    }
    const WeightedSelection best = max_weight_independent(p, weights);
    out_ << p.ground().format(best.set) << " weight "
         << format_weight(best.weight) << "\n";
    return kExitOk;
  }

 private:
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CapGuard guard;
  CLI::App app{"Laminar matroid toolkit", "laminar"};
  app.require_subcommand(1);
  app.fallthrough();
  int max_n = 12;
  app.add_option("--max-n", max_n, "Largest ground set accepted (1-20)")
      ->check(CLI::Range(1, kMaxGroundSize));

  Runner runner(out);
  std::string path;
  std::string del;
  std::string con;
  std::string weights;
  std::function<int()> action;

  auto verb = [&](const std::string& name, const std::string& help,
                  std::function<int()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", path, "Input file (.ckt, .lam or .mbs)")
        ->required();
    sub->callback([&action, body] { action = body; });
    return sub;
  };
  verb("validate", "Parse and check an input file",
       [&] { return runner.validate(path); });
  verb("canon", "Print the canonical presentation",
       [&] { return runner.canon(path); });
  verb("explicit", "Print the circuit list",
       [&] { return runner.explicit_form(path); });
  verb("is-laminar", "Decide laminarity with a certificate",
       [&] { return runner.laminar(path); });
  CLI::App* minor_cmd = verb("minor", "Delete and contract elements",
                             [&] { return runner.take_minor(path, del, con); });
  minor_cmd->add_option("--delete", del, "Comma-separated elements to delete");
  minor_cmd->add_option("--contract", con,
                        "Comma-separated elements to contract");
  verb("classify", "Print every class verdict",
       [&] { return runner.classify_all(path); });
  verb("construct", "Run a construction script",
       [&] { return runner.construct(path); });
  verb("deconstruct", "Print a construction script for a laminar matroid",
       [&] { return runner.deconstruct_input(path); });
  verb("witness", "Search for an excluded minor Y_r",
       [&] { return runner.witness(path); });
  CLI::App* weight_cmd =
      verb("maxweight", "Maximum-weight independent set",
           [&] { return runner.maxweight(path, weights); });
  weight_cmd->add_option("-w,--weights", weights, "id=value,... (integer or p/q)")
      ->required();

  // Name the offending token when the verb is misspelt.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--max-n") {
      ++i;
      continue;
    }
    if (args[i].starts_with("-")) continue;
    if (!app.get_subcommand_no_throw(args[i])) {
      err << "usage error: unknown verb '" << args[i] << "'\n";
      return kExitInputError;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    set_desk_scale_cap(max_n);
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kTooLarge ? kExitTooLarge : kExitInputError;
  }
}

}  // namespace laminar
