/* Copyright 2026 The spw Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spw/automaton.hpp"
#include "spw/error.hpp"
#include "spw/grammar.hpp"
#include "spw/language.hpp"
#include "spw/regex.hpp"
#include "spw/term.hpp"
#include "spw/universe.hpp"

namespace spw::cli {

namespace {

struct Config {
  std::string mode_name = "ordered";
  std::size_t max_atoms = 5;
  std::size_t n_max = 3;
  std::size_t step_factor = 4;
  std::size_t step_offset = 8;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 1;

  Mode mode() const { return parse_mode(mode_name); }
  StepBudget budget() const { return {step_factor, step_offset}; }
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out(out), err(err) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw Error("stdin ('-') can only be read once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;

 public:
  std::ostream& out;
  std::ostream& err;
};

int truth(Io& io, bool value) {
  io.out << (value ? "true" : "false") << '\n';
  return value ? kOk : kFalse;
}

std::string alphabet_or(const std::string& given, std::string fallback) {
  if (!given.empty()) return normalize_alphabet(given);
  return fallback.empty() ? std::string("a") : fallback;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io(in, out, err);
  Config cfg;
  std::function<int()> action;

  CLI::App app{"Series-parallel language workbench"};
  app.name("spw");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--mode", cfg.mode_name, "Semantics mode: ordered or commutative")
      ->check(CLI::IsMember({"ordered", "commutative"}));
  app.add_option("--max-atoms", cfg.max_atoms, "Atom bound for enumeration and generation");
  app.add_option("--nmax", cfg.n_max, "Power bound for closures");
  app.add_option("--step-factor", cfg.step_factor, "Membership step budget factor");
  app.add_option("--step-offset", cfg.step_offset, "Membership step budget offset");
  app.add_option("--cap", cfg.cap, "Cardinality cap for enumerations")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for fixture grammar generation");

  // term ---------------------------------------------------------------------
  auto* term = app.add_subcommand("term", "Single-term operations")->require_subcommand(1);
  std::string term_text;
  std::string alphabet;
  {
    auto* metrics = term->add_subcommand("metrics", "Length, depth, atoms and class");
    metrics->add_option("term", term_text)->required();
    metrics->callback([&] {
      action = [&] {
        Term t = parse_term(term_text);
        io.out << "lg=" << length(t) << " dp=" << depth(t) << " atoms=" << atoms_count(t)
               << " class=" << to_string(classify_term(t)) << '\n';
        return kOk;
      };
    });
    auto* rev = term->add_subcommand("reverse", "Reverse a term");
    rev->add_option("term", term_text)->required();
    rev->callback([&] {
      action = [&] {
        io.out << reverse(parse_term(term_text)).text() << '\n';
        return kOk;
      };
    });
    auto* canon = term->add_subcommand("canon", "Canonical form in --mode");
    canon->add_option("term", term_text)->required();
    canon->callback([&] {
      action = [&] {
        io.out << canonicalize(parse_term(term_text), cfg.mode()).text() << '\n';
        return kOk;
      };
    });
    auto* en = term->add_subcommand("enum", "All terms up to --max-atoms");
    en->add_option("--alphabet", alphabet, "Letters, e.g. ab")->required();
    en->callback([&] {
      action = [&] {
        io.out << format_language(enumerate_terms(alphabet, cfg.max_atoms, cfg.mode(), cfg.cap));
        return kOk;
      };
    });
  }

  // lang ---------------------------------------------------------------------
  auto* lang = app.add_subcommand("lang", "Finite-language operations")->require_subcommand(1);
  std::vector<std::string> files;
  std::string kind;
  std::size_t n = 0;
  auto load = [&](const std::string& path) { return parse_language(io.read(path), cfg.mode()); };
  auto emit = [&](const FiniteLang& l) {
    io.out << format_language(l);
    return kOk;
  };
  {
    auto binary = [&](const char* name, const char* help, FiniteLang (*op)(const FiniteLang&, const FiniteLang&)) {
      auto* sub = lang->add_subcommand(name, help);
      sub->add_option("files", files)->required()->expected(2);
      sub->callback([&, op] { action = [&, op] { return emit(op(load(files[0]), load(files[1]))); }; });
    };
    binary("concat", "Pairwise sequential products", &concat_lang);
    binary("par", "Pairwise parallel products", &par_lang);
    binary("union", "Set union", &union_lang);

    auto* pw = lang->add_subcommand("power", "n-fold product");
    pw->add_option("file", files)->required()->expected(1);
    pw->add_option("--kind", kind)->required()->check(CLI::IsMember({"seq", "par"}));
    pw->add_option("--n", n)->required();
    pw->callback([&] {
      action = [&] {
        return emit(power(load(files[0]), n, kind == "seq" ? ProductKind::Seq : ProductKind::Par));
      };
    });

    auto* cl = lang->add_subcommand("closure", "Closure truncated at --nmax");
    cl->add_option("file", files)->required()->expected(1);
    cl->add_option("--kind", kind)->required()->check(CLI::IsMember({"star", "par", "sp"}));
    cl->callback([&] {
      action = [&] {
        Closure c = kind == "star" ? Closure::Star : kind == "par" ? Closure::ParOplus : Closure::SpOtimes;
        return emit(kleene_bounded(load(files[0]), c, cfg.n_max));
      };
    });

    auto* rv = lang->add_subcommand("reverse", "Reverse every member");
    rv->add_option("file", files)->required()->expected(1);
    rv->callback([&] { action = [&] { return emit(reverse_lang(load(files[0]))); }; });

    auto* eq = lang->add_subcommand("equal", "Compare two languages");
    eq->add_option("files", files)->required()->expected(2);
    eq->callback([&] {
      action = [&] {
        LangDiff d = lang_equal(load(files[0]), load(files[1]));
        if (!d.equal) io.err << describe(d);
        return truth(io, d.equal);
      };
    });
  }

  // regex --------------------------------------------------------------------
  auto* regex = app.add_subcommand("regex", "Regular expressions")->require_subcommand(1);
  std::string regex_text;
  {
    auto* mt = regex->add_subcommand("match", "Match a term");
    mt->add_option("regex", regex_text)->required();
    mt->add_option("term", term_text)->required();
    mt->callback([&] {
      action = [&] { return truth(io, matches(parse_regex(regex_text), parse_term(term_text), cfg.mode())); };
    });
    auto* en = regex->add_subcommand("enum", "Matched terms up to --max-atoms");
    en->add_option("regex", regex_text)->required();
    en->add_option("--alphabet", alphabet, "Letters (default: those in the expression)");
    en->callback([&] {
      action = [&] {
        Regex r = parse_regex(regex_text);
        return emit(regex_enumerate(r, alphabet_or(alphabet, regex_alphabet(r)), cfg.max_atoms, cfg.mode(),
                                    cfg.cap));
      };
    });
    auto* tg = regex->add_subcommand("to-grammar", "Parallel-linear grammar of a fragment expression");
    tg->add_option("regex", regex_text)->required();
    tg->callback([&] {
      action = [&] {
        io.out << format_grammar(to_parallel_linear_grammar(parse_regex(regex_text)));
        return kOk;
      };
    });
  }

  // grammar ------------------------------------------------------------------
  auto* grammar = app.add_subcommand("grammar", "Grammars")->require_subcommand(1);
  std::string grammar_file;
  std::optional<std::size_t> max_steps;
  bool trace = false;
  {
    auto* cls = grammar->add_subcommand("classify", "Grammar class flags and production shapes");
    cls->add_option("grammar", grammar_file)->required();
    cls->callback([&] {
      action = [&] {
        Grammar g = parse_grammar(io.read(grammar_file));
        GrammarClass gc = classify_grammar(g);
        io.out << gc.names() << '\n';
        for (std::size_t i = 0; i < g.productions().size(); ++i) {
          const auto& p = g.productions()[i];
          io.out << "  " << p.lhs << " -> " << p.rhs.text() << "  " << to_string(gc.shapes[i]) << '\n';
        }
        return kOk;
      };
    });
    auto* gen = grammar->add_subcommand("generate", "Words derivable within the bounds");
    gen->add_option("grammar", grammar_file)->required();
    gen->add_option("--max-steps", max_steps, "Derivation step bound (default from the step budget)");
    gen->callback([&] {
      action = [&] {
        Grammar g = parse_grammar(io.read(grammar_file));
        std::size_t steps = max_steps.value_or(cfg.budget().steps_for(cfg.max_atoms));
        return emit(generate(g, cfg.max_atoms, steps, cfg.mode(), cfg.cap));
      };
    });
    auto* mem = grammar->add_subcommand("member", "Bounded membership");
    mem->add_option("grammar", grammar_file)->required();
    mem->add_option("term", term_text)->required();
    mem->add_flag("--trace", trace, "Print the derivation");
    mem->callback([&] {
      action = [&] {
        Grammar g = parse_grammar(io.read(grammar_file));
        Membership m = is_member(g, parse_term(term_text), cfg.mode(), cfg.budget(), cfg.cap);
        int rc = truth(io, m.member);
        if (trace && m.member) {
          for (std::size_t i = 0; i < m.trace.size(); ++i) io.out << (i ? "=> " : "   ") << m.trace[i].text() << '\n';
        }
        return rc;
      };
    });
    auto* rnd = grammar->add_subcommand("random", "Seeded random parallel-linear grammar (--seed)");
    rnd->callback([&] {
      action = [&] {
        io.out << format_grammar(random_parallel_linear_grammar(cfg.seed));
        return kOk;
      };
    });
  }

  // automaton ----------------------------------------------------------------
  auto* automaton = app.add_subcommand("automaton", "Branching automata")->require_subcommand(1);
  std::string automaton_file;
  std::string state;
  {
    auto* fg = automaton->add_subcommand("from-grammar", "Construct from a parallel-linear grammar");
    fg->add_option("grammar", grammar_file)->required();
    fg->callback([&] {
      action = [&] {
        io.out << serialize_automaton(from_linear_grammar(parse_grammar(io.read(grammar_file))));
        return kOk;
      };
    });
    auto* acc = automaton->add_subcommand("accepts", "Acceptance of a term");
    acc->add_option("automaton", automaton_file)->required();
    acc->add_option("term", term_text)->required();
    acc->callback([&] {
      action = [&] { return truth(io, accepts(parse_automaton(io.read(automaton_file)), parse_term(term_text))); };
    });
    auto* runs = automaton->add_subcommand("runs", "States reachable from a state on a term");
    runs->add_option("automaton", automaton_file)->required();
    runs->add_option("state", state)->required();
    runs->add_option("term", term_text)->required();
    runs->callback([&] {
      action = [&] {
        for (const auto& q : runs_between(parse_automaton(io.read(automaton_file)), state, parse_term(term_text))) {
          io.out << q << '\n';
        }
        return kOk;
      };
    });
    auto* en = automaton->add_subcommand("enum", "Accepted terms up to --max-atoms (commutative)");
    en->add_option("automaton", automaton_file)->required();
    en->add_option("--alphabet", alphabet, "Letters (default: the seq labels)");
    en->callback([&] {
      action = [&] {
        BranchingAutomaton a = parse_automaton(io.read(automaton_file));
        return emit(enumerate_accepted(a, alphabet_or(alphabet, a.alphabet()), cfg.max_atoms, cfg.cap));
      };
    });
  }

  // equiv --------------------------------------------------------------------
  auto* equiv = app.add_subcommand("equiv", "Bounded grammar/automaton language equality (commutative)");
  equiv->add_option("grammar", grammar_file)->required();
  equiv->add_option("--automaton", automaton_file, "Compare against this automaton instead of the construction");
  equiv->callback([&] {
    action = [&] {
      Grammar g = parse_grammar(io.read(grammar_file));
      BranchingAutomaton constructed = from_linear_grammar(g);
      std::optional<BranchingAutomaton> given;
      if (!automaton_file.empty()) given.emplace(parse_automaton(io.read(automaton_file)));
      LangDiff d = bounded_equivalence(g, given ? *given : constructed, cfg.max_atoms, cfg.budget(), cfg.cap);
      if (d.equal) {
        io.out << "equal up to " << cfg.max_atoms << " atoms\n";
        return kOk;
      }
      io.out << "different\n";
      io.err << "left: grammar, right: automaton\n" << describe(d);
      return kFalse;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kParse;
  }

  try {
    if (!action) return kParse;
    return action();
  } catch (const ModeMismatch& e) {
    io.err << "error: " << e.what() << '\n';
    return kModeMismatch;
  } catch (const FragmentError& e) {
    io.err << "error: " << e.what() << '\n';
    return kFragment;
  } catch (const NotParallelLinear& e) {
    io.err << "error: NotParallelLinear: " << e.what() << '\n';
    return kClassification;
  } catch (const ResourceLimit& e) {
    io.err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kParse;
  }
}

}  // namespace spw::cli
