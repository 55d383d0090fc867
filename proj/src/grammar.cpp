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

#include "spw/grammar.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "spw/error.hpp"

namespace spw {

namespace {

void collect_symbols(const Term& t, std::string& terminals, std::string& nonterminals) {
  if (t.is_leaf()) {
    (is_terminal(t.symbol()) ? terminals : nonterminals) += t.symbol();
    return;
  }
  for (const Term& c : t.children()) collect_symbols(c, terminals, nonterminals);
}

std::string sorted_unique(std::string s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Grammar::Grammar(std::vector<char> nonterminals, std::string terminals, std::vector<Production> productions,
                 char start)
    : nonterminals_(std::move(nonterminals)),
      terminals_(sorted_unique(std::move(terminals))),
      productions_(std::move(productions)),
      start_(start) {
  if (productions_.empty()) throw ValidationError("grammar has no productions");
  auto declared = [this](char nt) {
    return std::find(nonterminals_.begin(), nonterminals_.end(), nt) != nonterminals_.end();
  };
  if (!declared(start_)) throw ValidationError(std::string("start symbol ") + start_ + " is not declared");
  for (const Production& p : productions_) {
    if (!is_nonterminal(p.lhs) || !declared(p.lhs)) {
      throw ValidationError(std::string("undeclared nonterminal ") + p.lhs + " on left-hand side");
    }
    std::string ts;
    std::string ns;
    collect_symbols(p.rhs, ts, ns);
    for (char c : ns) {
      if (!declared(c)) throw ValidationError(std::string("undeclared nonterminal ") + c);
    }
    for (char c : ts) {
      if (terminals_.find(c) == std::string::npos) throw ValidationError(std::string("undeclared terminal ") + c);
    }
  }
}

Grammar Grammar::from_productions(std::vector<Production> productions) {
  if (productions.empty()) throw ValidationError("grammar has no productions");
  std::vector<char> nts;
  std::string ts;
  for (const Production& p : productions) {
    if (std::find(nts.begin(), nts.end(), p.lhs) == nts.end()) nts.push_back(p.lhs);
    std::string ignored;
    collect_symbols(p.rhs, ts, ignored);
  }
  char start = productions.front().lhs;
  return Grammar(std::move(nts), std::move(ts), std::move(productions), start);
}

std::vector<Term> Grammar::alternatives(char lhs) const {
  std::vector<Term> out;
  for (const Production& p : productions_)
    if (p.lhs == lhs) out.push_back(p.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::vector<Production> prods;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      auto offset_of = [&](std::string_view part) { return static_cast<std::size_t>(part.data() - text.data()); };
      std::size_t arrow = line.find("->");
      if (arrow == std::string_view::npos) throw ParseError(offset_of(line), "expected 'A -> ...'");
      std::string_view lhs = trim(line.substr(0, arrow));
      if (lhs.size() != 1 || !is_nonterminal(lhs[0])) {
        throw ParseError(offset_of(line), "left-hand side must be a single uppercase letter");
      }
      std::string_view rhs = line.substr(arrow + 2);
      // Alternatives are split on '|' that is not part of '||'.
      std::size_t alt_start = 0;
      for (std::size_t i = 0; i <= rhs.size(); ++i) {
        bool boundary = i == rhs.size();
        if (!boundary && rhs[i] == '|') {
          if (i + 1 < rhs.size() && rhs[i + 1] == '|') {
            ++i;
            continue;
          }
          boundary = true;
        }
        if (!boundary) continue;
        std::string_view alt = rhs.substr(alt_start, i - alt_start);
        std::string_view trimmed = trim(alt);
        if (trimmed.empty()) throw ParseError(offset_of(alt), "empty alternative");
        try {
          prods.push_back({lhs[0], parse_term(trimmed, true)});
        } catch (const ParseError& e) {
          throw e.shifted(offset_of(trimmed));
        }
        alt_start = i + 1;
      }
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  return Grammar::from_productions(std::move(prods));
}

std::string format_grammar(const Grammar& g) {
  std::string out;
  for (char nt : g.nonterminals()) {
    std::vector<Term> alts = g.alternatives(nt);
    if (alts.empty()) continue;
    out += nt;
    out += " ->";
    for (std::size_t i = 0; i < alts.size(); ++i) {
      out += i ? " | " : " ";
      out += alts[i].text();
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(ProductionShape shape) {
  switch (shape) {
    case ProductionShape::RightLinear: return "right-linear";
    case ProductionShape::LeftLinear: return "left-linear";
    case ProductionShape::ParallelLinear: return "parallel-linear";
    case ProductionShape::Terminal: return "terminal";
    case ProductionShape::Other: return "other";
  }
  return "other";
}

namespace {

bool has_nonterminal(const Term& t) {
  if (t.is_leaf()) return is_nonterminal(t.symbol());
  return std::any_of(t.children().begin(), t.children().end(), has_nonterminal);
}

bool is_terminal_leaf(const Term& t) { return t.is_leaf() && is_terminal(t.symbol()); }
bool is_nonterminal_leaf(const Term& t) { return t.is_leaf() && is_nonterminal(t.symbol()); }

// Exactly one nonterminal leaf at `pos` and terminal leaves elsewhere.
bool linear_at(std::span<const Term> kids, std::size_t pos) {
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i == pos ? !is_nonterminal_leaf(kids[i]) : !is_terminal_leaf(kids[i])) return false;
  }
  return true;
}

bool contains_kind(const Term& t, Kind k) {
  if (t.kind() == k) return true;
  return std::any_of(t.children().begin(), t.children().end(),
                     [k](const Term& c) { return contains_kind(c, k); });
}

}  // namespace

ProductionShape production_shape(const Production& p) {
  const Term& rhs = p.rhs;
  if (!has_nonterminal(rhs)) return ProductionShape::Terminal;
  auto kids = rhs.children();
  if (rhs.kind() == Kind::Seq) {
    if (linear_at(kids, kids.size() - 1)) return ProductionShape::RightLinear;
    if (linear_at(kids, 0)) return ProductionShape::LeftLinear;
  }
  if (rhs.kind() == Kind::Par) {
    if (linear_at(kids, kids.size() - 1) || linear_at(kids, 0)) return ProductionShape::ParallelLinear;
  }
  return ProductionShape::Other;
}

std::string GrammarClass::names() const {
  using namespace grammar_class;
  static constexpr std::pair<std::uint32_t, const char*> kNames[] = {
      {kRightLinear, "RIGHT_LINEAR"},   {kLeftLinear, "LEFT_LINEAR"},     {kParallelLinear, "PARALLEL_LINEAR"},
      {kSpRegular, "SP_REGULAR"},       {kCfSequential, "CF_SEQUENTIAL"}, {kCfParallel, "CF_PARALLEL"},
      {kCfSp, "CF_SP"},
  };
  std::string out;
  for (auto [flag, name] : kNames) {
    if (!has(flag)) continue;
    if (!out.empty()) out += ' ';
    out += name;
  }
  return out;
}

GrammarClass classify_grammar(const Grammar& g) {
  using namespace grammar_class;
  GrammarClass gc;
  gc.flags = kCfSequential | kCfParallel | kCfSp | kRightLinear | kLeftLinear | kParallelLinear | kSpRegular;
  for (const Production& p : g.productions()) {
    ProductionShape shape = production_shape(p);
    gc.shapes.push_back(shape);
    bool has_seq = contains_kind(p.rhs, Kind::Seq);
    bool has_par = contains_kind(p.rhs, Kind::Par);
    if (has_par) gc.flags &= ~kCfSequential;
    if (has_seq) gc.flags &= ~kCfParallel;
    bool terminal = shape == ProductionShape::Terminal;
    if (!(shape == ProductionShape::RightLinear || (terminal && !has_par))) gc.flags &= ~kRightLinear;
    if (!(shape == ProductionShape::LeftLinear || (terminal && !has_par))) gc.flags &= ~kLeftLinear;
    if (!(shape == ProductionShape::ParallelLinear || (terminal && term_shape(p.rhs).parallel))) {
      gc.flags &= ~kParallelLinear;
    }
    if (shape == ProductionShape::Other) gc.flags &= ~kSpRegular;
  }
  return gc;
}

// ---------------------------------------------------------------------------
// Derivation

namespace {

std::size_t terminal_count(const Term& t) {
  if (t.is_leaf()) return is_terminal(t.symbol()) ? 1 : 0;
  std::size_t n = 0;
  for (const Term& c : t.children()) n += terminal_count(c);
  return n;
}

// Replaces the first nonterminal leaf in serialization order.
std::optional<Term> replace_leftmost(const Term& t, const Term& rhs) {
  if (t.is_leaf()) return is_nonterminal(t.symbol()) ? std::optional<Term>(rhs) : std::nullopt;
  auto kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (auto r = replace_leftmost(kids[i], rhs)) {
      std::vector<Term> next(kids.begin(), kids.end());
      next[i] = std::move(*r);
      return t.kind() == Kind::Seq ? Term::seq(std::move(next)) : Term::par(std::move(next));
    }
  }
  return std::nullopt;
}

std::optional<char> leftmost_nonterminal(const Term& t) {
  if (t.is_leaf()) return is_nonterminal(t.symbol()) ? std::optional<char>(t.symbol()) : std::nullopt;
  for (const Term& c : t.children())
    if (auto r = leftmost_nonterminal(c)) return r;
  return std::nullopt;
}

struct FormNode {
  Term form;
  std::size_t parent;
  std::size_t steps;
};

// Breadth-first derivation. `on_word` is called with the index of every
// fully terminal form; returning true stops the search.
template <typename OnWord>
std::vector<FormNode> derive(const Grammar& g, std::size_t max_atoms, std::size_t max_steps, std::size_t cap,
                             OnWord on_word) {
  std::vector<FormNode> nodes;
  std::unordered_set<std::string> seen;
  Term start = Term::leaf(g.start());
  nodes.push_back({start, static_cast<std::size_t>(-1), 0});
  seen.insert(start.text());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    auto nt = leftmost_nonterminal(nodes[idx].form);
    if (!nt) {
      if (on_word(nodes, idx)) break;
      continue;
    }
    if (nodes[idx].steps >= max_steps) continue;
    for (const Term& rhs : g.alternatives(*nt)) {
      Term next = *replace_leftmost(nodes[idx].form, rhs);
      if (terminal_count(next) > max_atoms) continue;
      if (!seen.insert(next.text()).second) continue;
      if (nodes.size() >= cap) {
        throw ResourceLimit("derivation exceeds cap of " + std::to_string(cap) + " sentential forms");
      }
      nodes.push_back({std::move(next), idx, nodes[idx].steps + 1});
      queue.push_back(nodes.size() - 1);
    }
  }
  return nodes;
}

}  // namespace

FiniteLang generate(const Grammar& g, std::size_t max_atoms, std::size_t max_steps, Mode mode, std::size_t cap) {
  std::vector<Term> words;
  derive(g, max_atoms, max_steps, cap, [&words](const std::vector<FormNode>& nodes, std::size_t idx) {
    words.push_back(nodes[idx].form);
    return false;
  });
  return FiniteLang(mode, std::move(words));
}

Membership is_member(const Grammar& g, const Term& t, Mode mode, StepBudget budget, std::size_t cap) {
  Term target = canonicalize(t, mode);
  std::size_t atoms = atoms_count(target);
  std::optional<std::size_t> hit;
  auto nodes = derive(g, atoms, budget.steps_for(atoms), cap,
                      [&](const std::vector<FormNode>& ns, std::size_t idx) {
                        if (canonicalize(ns[idx].form, mode) != target) return false;
                        hit = idx;
                        return true;
                      });
  Membership m;
  if (!hit) return m;
  m.member = true;
  for (std::size_t i = *hit; i != static_cast<std::size_t>(-1); i = nodes[i].parent) m.trace.push_back(nodes[i].form);
  std::reverse(m.trace.begin(), m.trace.end());
  return m;
}

Grammar random_parallel_linear_grammar(std::uint64_t seed) {
  // mt19937_64 output is fully specified, unlike the standard distributions.
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };
  static constexpr char kNames[] = {'S', 'A', 'B'};
  std::size_t count = 1 + pick(3);
  std::vector<Production> prods;
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t n_prods = 1 + pick(3);
    for (std::size_t k = 0; k < n_prods; ++k) {
      std::vector<Term> word;
      std::size_t n_atoms = 1 + pick(2);
      for (std::size_t i = 0; i < n_atoms; ++i) word.push_back(Term::leaf(static_cast<char>('a' + pick(2))));
      std::size_t kind = pick(10);
      Term rhs;
      if (kind < 4) {
        word.push_back(Term::leaf(kNames[pick(count)]));
        rhs = Term::par(std::move(word));
      } else if (kind < 6) {
        word.insert(word.begin(), Term::leaf(kNames[pick(count)]));
        rhs = Term::par(std::move(word));
      } else if (kind < 9) {
        rhs = Term::par(std::move(word));
      }
      Production p{kNames[v], rhs};
      if (std::find(prods.begin(), prods.end(), p) == prods.end()) prods.push_back(std::move(p));
    }
  }
  return Grammar::from_productions(std::move(prods));
}

}  // namespace spw
