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

#include "spw/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <unordered_map>

#include "spw/error.hpp"
#include "spw/universe.hpp"

namespace spw {

bool ParGuard::admits(const Term& t) const {
  if (any) return true;
  if (!term_shape(t).parallel) return false;
  return words.count(atoms_multiset(t)) != 0;
}

// ---------------------------------------------------------------------------
// Model

namespace {

template <typename T, typename Key>
bool unique_by(const std::vector<T>& items, Key key) {
  std::vector<std::string> keys;
  for (const T& x : items) keys.push_back(key(x));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace

BranchingAutomaton::BranchingAutomaton(Parts parts) : parts_(std::move(parts)) {
  if (!unique_by(parts_.states, [](const StateId& s) { return s; })) {
    throw ValidationError("duplicate state name");
  }
  auto check_state = [this](const StateId& s, const char* where) {
    if (!has_state(s)) throw ValidationError("undeclared state '" + s + "' in " + where);
  };
  for (const auto& s : parts_.initial) check_state(s, "initial");
  for (const auto& s : parts_.final) check_state(s, "final");
  for (const auto& t : parts_.seq) {
    check_state(t.from, "seq");
    check_state(t.to, "seq");
    if (t.label < 'a' || t.label > 'z') throw ValidationError("seq label must be a letter a-z");
  }
  if (!unique_by(parts_.forks, [](const ForkTransition& f) { return f.id; })) {
    throw ValidationError("duplicate fork id");
  }
  if (!unique_by(parts_.joins, [](const JoinTransition& j) { return j.id; })) {
    throw ValidationError("duplicate join id");
  }
  for (const auto& f : parts_.forks) {
    check_state(f.from, "fork");
    for (const auto& s : f.targets) check_state(s, "fork");
    if (f.targets.size() < 2) throw ValidationError("fork " + f.id + " needs at least two targets");
  }
  for (const auto& j : parts_.joins) {
    check_state(j.to, "join");
    for (const auto& s : j.sources) check_state(s, "join");
    if (j.sources.size() < 2) throw ValidationError("join " + j.id + " needs at least two sources");
  }
  std::set<std::string> used_forks;
  std::set<std::string> used_joins;
  for (const auto& p : parts_.pars) {
    fork(p.fork);
    join(p.join);
    if (!p.guard.any && p.guard.words.empty()) throw ValidationError("par guard must list at least one word");
    used_forks.insert(p.fork);
    used_joins.insert(p.join);
  }
  for (const auto& f : parts_.forks) {
    if (!used_forks.count(f.id)) throw ValidationError("fork " + f.id + " is not used by any par transition");
  }
  for (const auto& j : parts_.joins) {
    if (!used_joins.count(j.id)) throw ValidationError("join " + j.id + " is not used by any par transition");
  }
}

const ForkTransition& BranchingAutomaton::fork(std::string_view id) const {
  for (const auto& f : parts_.forks)
    if (f.id == id) return f;
  throw ValidationError("par references unknown fork '" + std::string(id) + "'");
}

const JoinTransition& BranchingAutomaton::join(std::string_view id) const {
  for (const auto& j : parts_.joins)
    if (j.id == id) return j;
  throw ValidationError("par references unknown join '" + std::string(id) + "'");
}

bool BranchingAutomaton::has_state(std::string_view s) const {
  return std::find(parts_.states.begin(), parts_.states.end(), s) != parts_.states.end();
}

std::string BranchingAutomaton::alphabet() const {
  std::string out;
  for (const auto& t : parts_.seq) out += t.label;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (!text_.substr(pos_).starts_with(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  char letter() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z') fail("expected letter a-z");
    return text_[pos_++];
  }
  std::vector<StateId> ident_list() {
    std::vector<StateId> out;
    while (!done()) out.push_back(ident());
    return out;
  }
  // `{q1, q2, ...}`
  std::vector<StateId> braced_idents() {
    expect("{");
    std::vector<StateId> out{ident()};
    while (accept(",")) out.push_back(ident());
    expect("}");
    return out;
  }
  void end() {
    if (!done()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(base_ + pos_, msg); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string join_states(const std::vector<StateId>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string format_multiset(const AtomMultiset& m) {
  std::string out;
  for (const auto& [c, n] : m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.empty()) out += ',';
      out += c;
    }
  }
  return out;
}

}  // namespace

BranchingAutomaton parse_automaton(std::string_view text) {
  static constexpr std::string_view kSections[] = {"states", "initial", "final", "seq", "fork", "join", "par"};
  BranchingAutomaton::Parts parts;
  int last_rank = -1;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineScanner sc(line, line_start);
    if (!sc.done()) {
      std::string key = sc.ident();
      sc.expect(":");
      auto it = std::find(std::begin(kSections), std::end(kSections), key);
      if (it == std::end(kSections)) sc.fail("unknown section '" + key + "'");
      int rank = static_cast<int>(it - std::begin(kSections));
      if (rank < last_rank || (rank <= 2 && rank == last_rank)) sc.fail("section '" + key + "' out of order");
      if (rank > 0 && last_rank < std::min(rank - 1, 2)) sc.fail("missing section before '" + key + "'");
      last_rank = rank;
      switch (rank) {
        case 0: parts.states = sc.ident_list(); break;
        case 1: parts.initial = sc.ident_list(); break;
        case 2: parts.final = sc.ident_list(); break;
        case 3: {
          SeqTransition t;
          t.from = sc.ident();
          t.label = sc.letter();
          t.to = sc.ident();
          sc.end();
          parts.seq.push_back(std::move(t));
          break;
        }
        case 4: {
          ForkTransition f;
          f.id = sc.ident();
          f.from = sc.ident();
          sc.expect("->");
          f.targets = sc.braced_idents();
          sc.end();
          parts.forks.push_back(std::move(f));
          break;
        }
        case 5: {
          JoinTransition j;
          j.id = sc.ident();
          j.sources = sc.braced_idents();
          sc.expect("->");
          j.to = sc.ident();
          sc.end();
          parts.joins.push_back(std::move(j));
          break;
        }
        case 6: {
          ParTransition p;
          p.fork = sc.ident();
          if (sc.accept("*")) {
            p.guard = ParGuard::anything();
          } else {
            sc.expect("{");
            std::set<AtomMultiset> words;
            do {
              AtomMultiset m;
              do {
                ++m[sc.letter()];
              } while (sc.accept(","));
              words.insert(std::move(m));
            } while (sc.accept(";"));
            sc.expect("}");
            p.guard = ParGuard::of(std::move(words));
          }
          p.join = sc.ident();
          sc.end();
          parts.pars.push_back(std::move(p));
          break;
        }
      }
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  if (last_rank < 2) throw ParseError(text.size(), "missing states/initial/final header");
  return BranchingAutomaton(std::move(parts));
}

std::string serialize_automaton(const BranchingAutomaton& a) {
  const auto& p = a.parts();
  std::string out;
  out += "states: " + join_states(p.states, " ") + "\n";
  out += "initial: " + join_states(p.initial, " ") + "\n";
  out += "final: " + join_states(p.final, " ") + "\n";
  for (const auto& t : p.seq) out += "seq: " + t.from + " " + t.label + " " + t.to + "\n";
  for (const auto& f : p.forks) out += "fork: " + f.id + " " + f.from + " -> {" + join_states(f.targets, ", ") + "}\n";
  for (const auto& j : p.joins) out += "join: " + j.id + " {" + join_states(j.sources, ", ") + "} -> " + j.to + "\n";
  for (const auto& t : p.pars) {
    out += "par: " + t.fork + " ";
    if (t.guard.any) {
      out += "*";
    } else {
      out += "{";
      bool first = true;
      for (const auto& m : t.guard.words) {
        if (!first) out += ";";
        first = false;
        out += format_multiset(m);
      }
      out += "}";
    }
    out += " " + t.join + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Runs

struct RunSearch::Impl {
  struct Par {
    std::size_t index;
    const ParGuard* guard;
    std::vector<int> targets;
    std::vector<int> sources;  // sorted
    int to;
  };

  const BranchingAutomaton& automaton;
  ParObserver observer;
  std::unordered_map<std::string, int> ids;
  std::vector<std::map<char, std::vector<int>>> seq;
  std::vector<std::vector<Par>> pars_from;
  std::unordered_map<std::string, std::vector<int>> memo;

  Impl(const BranchingAutomaton& a, ParObserver obs) : automaton(a), observer(std::move(obs)) {
    const auto& parts = a.parts();
    for (std::size_t i = 0; i < parts.states.size(); ++i) ids[parts.states[i]] = static_cast<int>(i);
    seq.resize(parts.states.size());
    pars_from.resize(parts.states.size());
    for (const auto& t : parts.seq) {
      auto& succ = seq[ids.at(t.from)][t.label];
      int to = ids.at(t.to);
      if (std::find(succ.begin(), succ.end(), to) == succ.end()) succ.push_back(to);
    }
    for (std::size_t i = 0; i < parts.pars.size(); ++i) {
      const auto& pt = parts.pars[i];
      const auto& f = a.fork(pt.fork);
      const auto& j = a.join(pt.join);
      Par p{i, &pt.guard, {}, {}, ids.at(j.to)};
      for (const auto& s : f.targets) p.targets.push_back(ids.at(s));
      for (const auto& s : j.sources) p.sources.push_back(ids.at(s));
      std::sort(p.sources.begin(), p.sources.end());
      pars_from[ids.at(f.from)].push_back(std::move(p));
    }
  }

  const std::vector<int>& runs(int p, const Term& t) {
    std::string key = std::to_string(p) + ':' + t.text();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<int> result = compute(p, t);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return memo.emplace(std::move(key), std::move(result)).first->second;
  }

  std::vector<int> compute(int p, const Term& t) {
    switch (t.kind()) {
      case Kind::Eps: return {p};
      case Kind::Leaf: {
        auto it = seq[p].find(t.symbol());
        return it == seq[p].end() ? std::vector<int>{} : it->second;
      }
      case Kind::Seq: {
        std::vector<int> cur{p};
        for (const Term& c : t.children()) {
          std::vector<int> next;
          for (int q : cur) {
            const auto& r = runs(q, c);
            next.insert(next.end(), r.begin(), r.end());
          }
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          cur = std::move(next);
          if (cur.empty()) break;
        }
        return cur;
      }
      case Kind::Par: {
        std::vector<int> out;
        std::vector<Term> items(t.children().begin(), t.children().end());
        for (const Par& par : pars_from[p]) {
          if (par.targets.size() != par.sources.size() || par.targets.size() > items.size()) continue;
          if (!par.guard->admits(t)) continue;
          if (fires(par, items)) {
            out.push_back(par.to);
            if (observer) observer(par.index, t);
          }
        }
        return out;
      }
    }
    return {};
  }

  // Some assignment of the branches to fork targets (every target gets a
  // nonempty block) whose end states can be matched one-to-one with the join
  // sources.
  bool fires(const Par& par, const std::vector<Term>& items) {
    std::size_t m = par.targets.size();
    std::vector<std::size_t> owner(items.size(), 0);
    std::vector<std::size_t> load(m, 0);
    std::function<bool(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t empty) -> bool {
      if (items.size() - i < empty) return false;
      if (i == items.size()) return blocks_join(par, items, owner);
      for (std::size_t b = 0; b < m; ++b) {
        owner[i] = b;
        ++load[b];
        bool ok = assign(i + 1, load[b] == 1 ? empty - 1 : empty);
        --load[b];
        if (ok) return true;
      }
      return false;
    };
    return assign(0, m);
  }

  bool blocks_join(const Par& par, const std::vector<Term>& items, const std::vector<std::size_t>& owner) {
    std::size_t m = par.targets.size();
    std::vector<const std::vector<int>*> ends(m);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<Term> block;
      for (std::size_t i = 0; i < items.size(); ++i)
        if (owner[i] == b) block.push_back(items[i]);
      ends[b] = &runs(par.targets[b], Term::par(std::move(block)));
      if (ends[b]->empty()) return false;
    }
    std::map<int, std::size_t> need;
    for (int s : par.sources) ++need[s];
    std::function<bool(std::size_t)> match = [&](std::size_t b) -> bool {
      if (b == m) return true;
      for (int q : *ends[b]) {
        auto it = need.find(q);
        if (it == need.end() || it->second == 0) continue;
        --it->second;
        bool ok = match(b + 1);
        ++it->second;
        if (ok) return true;
      }
      return false;
    };
    return match(0);
  }
};

RunSearch::RunSearch(const BranchingAutomaton& a, ParObserver observer)
    : impl_(std::make_unique<Impl>(a, std::move(observer))) {}

RunSearch::~RunSearch() = default;

std::set<StateId> RunSearch::runs_between(const StateId& p, const Term& t) {
  auto it = impl_->ids.find(p);
  if (it == impl_->ids.end()) throw ValidationError("unknown state '" + p + "'");
  const auto& states = impl_->automaton.states();
  std::set<StateId> out;
  for (int q : impl_->runs(it->second, canonicalize(t, Mode::Commutative))) out.insert(states[q]);
  return out;
}

bool RunSearch::accepts(const Term& t) {
  Term c = canonicalize(t, Mode::Commutative);
  const auto& a = impl_->automaton;
  for (const auto& s : a.initial()) {
    for (int q : impl_->runs(impl_->ids.at(s), c)) {
      const auto& name = a.states()[q];
      if (std::find(a.final_states().begin(), a.final_states().end(), name) != a.final_states().end()) return true;
    }
  }
  return false;
}

std::set<StateId> runs_between(const BranchingAutomaton& a, const StateId& p, const Term& t) {
  return RunSearch(a).runs_between(p, t);
}

bool accepts(const BranchingAutomaton& a, const Term& t) { return RunSearch(a).accepts(t); }

// ---------------------------------------------------------------------------
// Construction from parallel-linear grammars

BranchingAutomaton from_linear_grammar(const Grammar& g) {
  GrammarClass gc = classify_grammar(g);
  if (!gc.has(grammar_class::kParallelLinear)) {
    throw NotParallelLinear("grammar is not parallel-linear (" + gc.names() + ")");
  }

  struct Rule {
    char lhs;
    std::vector<char> atoms;
    std::optional<char> next;
    bool operator==(const Rule&) const = default;
  };
  std::set<char> nullable;
  std::vector<Rule> rules;
  auto add = [&rules](Rule r) {
    if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(std::move(r));
  };
  for (const Production& p : g.productions()) {
    if (p.rhs.is_eps()) {
      nullable.insert(p.lhs);
      continue;
    }
    Rule r{p.lhs, {}, std::nullopt};
    std::vector<Term> leaves = p.rhs.is_leaf() ? std::vector<Term>{p.rhs}
                                               : std::vector<Term>(p.rhs.children().begin(), p.rhs.children().end());
    for (const Term& leaf : leaves) {
      if (is_nonterminal(leaf.symbol())) {
        r.next = leaf.symbol();
      } else {
        r.atoms.push_back(leaf.symbol());
      }
    }
    add(std::move(r));
  }
  // A nullable continuation may also be skipped entirely.
  for (std::size_t i = 0, n = rules.size(); i < n; ++i) {
    if (rules[i].next && nullable.count(*rules[i].next)) add({rules[i].lhs, rules[i].atoms, std::nullopt});
  }

  BranchingAutomaton::Parts parts;
  auto entry = [](char v) { return std::string("entry_") + v; };
  auto ret = [](char v) { return std::string("ret_") + v; };
  for (char v : g.nonterminals()) {
    parts.states.push_back(entry(v));
    parts.states.push_back(ret(v));
  }
  parts.initial.push_back(entry(g.start()));
  parts.final.push_back(ret(g.start()));
  if (nullable.count(g.start())) {
    std::string eps_state = std::string("eps_") + g.start();
    parts.states.push_back(eps_state);
    parts.initial.push_back(eps_state);
    parts.final.push_back(eps_state);
  }

  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    std::string tag = std::to_string(i + 1);
    if (!r.next && r.atoms.size() == 1) {
      parts.seq.push_back({entry(r.lhs), r.atoms[0], ret(r.lhs)});
      continue;
    }
    ForkTransition f{"F" + tag, entry(r.lhs), {}};
    JoinTransition j{"J" + tag, {}, ret(r.lhs)};
    for (std::size_t k = 0; k < r.atoms.size(); ++k) {
      std::string s = "s" + tag + "_" + std::to_string(k + 1);
      std::string t = "t" + tag + "_" + std::to_string(k + 1);
      parts.states.push_back(s);
      parts.states.push_back(t);
      parts.seq.push_back({s, r.atoms[k], t});
      f.targets.push_back(s);
      j.sources.push_back(t);
    }
    if (r.next) {
      f.targets.push_back(entry(*r.next));
      j.sources.push_back(ret(*r.next));
    }
    parts.pars.push_back({f.id, ParGuard::anything(), j.id});
    parts.forks.push_back(std::move(f));
    parts.joins.push_back(std::move(j));
  }
  return BranchingAutomaton(std::move(parts));
}

FiniteLang enumerate_accepted(const BranchingAutomaton& a, std::string_view alphabet, std::size_t max_atoms,
                              std::size_t cap) {
  FiniteLang universe = enumerate_terms(alphabet, max_atoms, Mode::Commutative, cap);
  RunSearch search(a);
  std::vector<Term> out;
  for (const Term& t : universe)
    if (search.accepts(t)) out.push_back(t);
  return FiniteLang(Mode::Commutative, std::move(out));
}

LangDiff bounded_equivalence(const Grammar& g, const BranchingAutomaton& a, std::size_t max_atoms,
                             StepBudget budget, std::size_t cap) {
  std::string alphabet = g.terminals() + a.alphabet();
  if (alphabet.empty()) alphabet = "a";
  FiniteLang from_grammar = generate(g, max_atoms, budget.steps_for(max_atoms), Mode::Commutative, cap);
  FiniteLang from_automaton = enumerate_accepted(a, alphabet, max_atoms, cap);
  return lang_equal(from_grammar, from_automaton);
}

}  // namespace spw
