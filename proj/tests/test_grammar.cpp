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

#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spw/error.hpp"
#include "spw/universe.hpp"
#include "support.hpp"

using namespace spw;
using oracle::lang;
using spw::test::gen;
using spw::test::grammar_file;
using spw::test::T;

namespace {

bool subset(const FiniteLang& a, const FiniteLang& b) {
  for (const Term& t : a)
    if (!b.contains(t)) return false;
  return true;
}

bool has_seq_node(const Term& t) {
  if (t.kind() == Kind::Seq) return true;
  for (const Term& c : t.children())
    if (has_seq_node(c)) return true;
  return false;
}

}  // namespace

TEST_CASE("grammar file parsing") {
  Grammar g1 = grammar_file("ex1.g");
  CHECK(g1.start() == 'S');
  CHECK(g1.nonterminals() == std::vector<char>{'S'});
  CHECK(g1.terminals() == "ab");
  REQUIRE(g1.productions().size() == 3);
  CHECK(g1.productions()[0].rhs.text() == "a||b||S");
  CHECK(g1.productions()[2].rhs.is_eps());

  Grammar g2 = grammar_file("ex2.g");
  CHECK(g2.nonterminals() == std::vector<char>{'S', 'A', 'B'});
  CHECK(g2.alternatives('A').size() == 2);
  CHECK(g2.productions()[0].rhs.text() == "a.A||b.B");

  CHECK(parse_grammar(format_grammar(g2)) == g2);
  CHECK(format_grammar(g1) == "S -> a||b||S | a||b | eps\n");
}

TEST_CASE("grammar load errors") {
  CHECK_THROWS_AS(parse_grammar("S -> X\n"), ValidationError);
  CHECK_THROWS_AS(parse_grammar(""), ValidationError);
  CHECK_THROWS_AS(parse_grammar("S -> a |\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("s -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("S a\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar("S -> a..b\n"), ParseError);
  CHECK_THROWS_AS(Grammar({'S'}, "a", {{'S', T("b")}}, 'S'), ValidationError);
  CHECK_THROWS_AS(Grammar({'A'}, "a", {{'A', T("a")}}, 'S'), ValidationError);
}

TEST_CASE("production shapes") {
  auto shape = [](const char* rhs) { return production_shape({'S', parse_term(rhs, true)}); };
  CHECK(shape("a.b.B") == ProductionShape::RightLinear);
  CHECK(shape("B.a") == ProductionShape::LeftLinear);
  CHECK(shape("a||B") == ProductionShape::ParallelLinear);
  CHECK(shape("B||a||b") == ProductionShape::ParallelLinear);
  CHECK(shape("a||b") == ProductionShape::Terminal);
  CHECK(shape("eps") == ProductionShape::Terminal);
  CHECK(shape("B") == ProductionShape::Other);
  CHECK(shape("a||B||b") == ProductionShape::Other);
  CHECK(shape("a.A||b.B") == ProductionShape::Other);
  CHECK(shape("(a||b).B") == ProductionShape::Other);
  CHECK(to_string(ProductionShape::ParallelLinear) == "parallel-linear");
}

TEST_CASE("classification") {
  GrammarClass c71 = classify_grammar(grammar_file("ex71.g"));
  CHECK(c71.has(grammar_class::kParallelLinear));
  CHECK(c71.has(grammar_class::kSpRegular));
  CHECK(c71.has(grammar_class::kCfParallel));
  CHECK_FALSE(c71.has(grammar_class::kRightLinear));
  CHECK(c71.names() == "PARALLEL_LINEAR SP_REGULAR CF_PARALLEL CF_SP");

  GrammarClass c72 = classify_grammar(grammar_file("ex72.g"));
  CHECK(c72.has(grammar_class::kSpRegular));
  CHECK_FALSE(c72.has(grammar_class::kParallelLinear));
  CHECK(c72.shapes == std::vector<ProductionShape>{ProductionShape::LeftLinear, ProductionShape::ParallelLinear,
                                                   ProductionShape::Terminal});

  GrammarClass c2 = classify_grammar(grammar_file("ex2.g"));
  CHECK(c2.has(grammar_class::kCfSp));
  CHECK_FALSE(c2.has(grammar_class::kSpRegular));

  GrammarClass c1 = classify_grammar(grammar_file("ex1.g"));
  CHECK(c1.has(grammar_class::kParallelLinear));
  CHECK(c1.has(grammar_class::kCfParallel));

  GrammarClass seq = classify_grammar(parse_grammar("S -> a.S | b\n"));
  CHECK(seq.has(grammar_class::kRightLinear));
  CHECK(seq.has(grammar_class::kCfSequential));
  CHECK_FALSE(seq.has(grammar_class::kCfParallel));
}

TEST_CASE("generation examples") {
  CHECK(gen(grammar_file("ex1.g"), 6) ==
        lang(Mode::Ordered, {"eps", "a||b", "a||b||a||b", "a||b||a||b||a||b"}));
  CHECK(gen(grammar_file("ex71.g"), 3) == lang(Mode::Ordered, {"a||b", "a||b||b"}));
  CHECK(gen(grammar_file("ex2.g"), 4) ==
        lang(Mode::Ordered, {"a||b", "a.a||b", "a||b.b", "a.a||b.b", "a.a.a||b", "a||b.b.b"}));
  // A -> b gives b.a as well, the n = 0 member.
  CHECK(gen(grammar_file("ex72.g"), 5) ==
        lang(Mode::Ordered, {"b.a", "(a||b).a", "(a||a||b).a", "(a||a||a||b).a"}));
  CHECK(gen(grammar_file("ex1.g"), 0).size() == 1);
  CHECK(generate(grammar_file("ex1.g"), 6, 0, Mode::Ordered).empty());
  CHECK_THROWS_AS(generate(parse_grammar("S -> S||S | a | b\n"), 6, 30, Mode::Ordered, 100), ResourceLimit);
}

TEST_CASE("a^m||b^n grammar matches its closed form") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<Term> expected;
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t k = 1; m + k <= n; ++k) {
        std::vector<Term> as(m, Term::leaf('a')), bs(k, Term::leaf('b'));
        expected.push_back(Term::par({Term::seq(as), Term::seq(bs)}));
      }
    }
    CHECK(gen(grammar_file("ex2.g"), n) == FiniteLang(Mode::Ordered, expected));
  }
}

TEST_CASE("membership") {
  Grammar g2 = grammar_file("ex2.g");
  Membership m = is_member(g2, T("a.a||b"), Mode::Ordered);
  CHECK(m.member);
  std::vector<std::string> trace;
  for (const Term& f : m.trace) trace.push_back(f.text());
  CHECK(trace == std::vector<std::string>{"S", "a.A||b.B", "a.A.a||b.B", "a.a||b.B", "a.a||b"});
  CHECK_FALSE(is_member(g2, T("a.b"), Mode::Ordered).member);
  CHECK(is_member(g2, T("a.a||b.b"), Mode::Ordered).member);
  CHECK_FALSE(is_member(g2, T("b||a"), Mode::Ordered).member);
  CHECK(is_member(g2, T("b||a"), Mode::Commutative).member);
  CHECK(is_member(grammar_file("ex72.g"), T("(a||b).a"), Mode::Ordered).member);
  CHECK(is_member(grammar_file("ex1.g"), Term::eps(), Mode::Ordered).member);
  CHECK(is_member(grammar_file("ex1.g"), Term::eps(), Mode::Ordered).trace.size() == 2);
  CHECK(is_member(grammar_file("ex72.g"), T("(a||b).a"), Mode::Ordered, StepBudget{0, 2}).member == false);
}

TEST_CASE("generated words of parallel grammars have no sequential node") {
  for (const char* file : {"ex1.g", "ex71.g"}) {
    Grammar g = grammar_file(file);
    REQUIRE(classify_grammar(g).has(grammar_class::kCfParallel));
    for (const Term& t : gen(g, 6)) CHECK_FALSE(has_seq_node(t));
  }
}

TEST_CASE("parallel-linear grammars generate parallel words") {
  std::vector<Grammar> grammars{grammar_file("ex71.g")};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) grammars.push_back(random_parallel_linear_grammar(seed));
  for (const Grammar& g : grammars) {
    CAPTURE(format_grammar(g));
    REQUIRE(classify_grammar(g).has(grammar_class::kParallelLinear));
    for (Mode mode : {Mode::Ordered, Mode::Commutative})
      for (const Term& t : gen(g, 5, mode)) {
        CHECK(term_shape(t).parallel);
        CHECK(length(t) <= 1);
        CHECK(classify_term(t) != TermClass::Mixed);
      }
  }
}

TEST_CASE("random grammars are deterministic and varied") {
  CHECK(random_parallel_linear_grammar(7) == random_parallel_linear_grammar(7));
  std::set<std::string> texts;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Grammar g = random_parallel_linear_grammar(seed);
    texts.insert(format_grammar(g));
    CHECK(g.nonterminals().size() <= 3);
    for (char v : g.nonterminals()) {
      CHECK(g.alternatives(v).size() >= 1);
      CHECK(g.alternatives(v).size() <= 3);
    }
  }
  CHECK(texts.size() > 10);
}

TEST_CASE("generation is monotone in both bounds") {
  for (const char* file : {"ex1.g", "ex2.g", "ex71.g", "ex72.g"}) {
    Grammar g = grammar_file(file);
    for (std::size_t atoms = 0; atoms < 5; ++atoms)
      for (std::size_t steps = 0; steps < 14; steps += 3) {
        FiniteLang base = generate(g, atoms, steps, Mode::Ordered);
        CHECK(subset(base, generate(g, atoms + 1, steps, Mode::Ordered)));
        CHECK(subset(base, generate(g, atoms, steps + 1, Mode::Ordered)));
      }
  }
}

TEST_CASE("membership agrees with generation") {
  for (const char* file : {"ex1.g", "ex2.g", "ex71.g", "ex72.g"}) {
    Grammar g = grammar_file(file);
    for (Mode mode : {Mode::Ordered, Mode::Commutative}) {
      for (const Term& t : enumerate_terms("ab", 4, mode)) {
        std::size_t n = atoms_count(t);
        bool expected = generate(g, n, StepBudget{}.steps_for(n), mode).contains(t);
        Membership m = is_member(g, t, mode);
        CHECK(m.member == expected);
        if (m.member) {
          REQUIRE(!m.trace.empty());
          CHECK(m.trace.front().text() == std::string(1, g.start()));
          CHECK(canonicalize(m.trace.back(), mode) == t);
        }
      }
    }
  }
}

TEST_CASE("metrics of the series-parallel regular example") {
  FiniteLang words = gen(grammar_file("ex72.g"), 7);
  CHECK(words.size() == 6);
  for (const Term& w : words) {
    CHECK(length(w) == 2);
    CHECK(depth(w) == atoms_count(w) - 1);
  }
}
