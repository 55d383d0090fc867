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

#include "spw/regex.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "spw/error.hpp"
#include "spw/universe.hpp"

namespace spw {

struct Regex::Node {
  RegexKind kind = RegexKind::EmptySet;
  char symbol = 0;
  std::vector<Regex> children;
  std::string text;
  std::size_t size = 1;
};

namespace {

int precedence(RegexKind k) {
  switch (k) {
    case RegexKind::Alt: return 1;
    case RegexKind::ParProd: return 2;
    case RegexKind::Cat: return 3;
    case RegexKind::CloseSeq:
    case RegexKind::ClosePar:
    case RegexKind::CloseSp: return 4;
    default: return 5;
  }
}

std::string wrap(const Regex& r, int min_prec) {
  if (precedence(r.kind()) < min_prec) return "(" + r.text() + ")";
  return r.text();
}

std::string render(RegexKind kind, char symbol, const std::vector<Regex>& kids) {
  auto join = [&kids](const char* sep, int min_prec) {
    std::string out;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += sep;
      out += wrap(kids[i], min_prec);
    }
    return out;
  };
  switch (kind) {
    case RegexKind::EmptySet: return "0";
    case RegexKind::Eps: return "eps";
    case RegexKind::Atom: return std::string(1, symbol);
    case RegexKind::Cat: return join(".", 4);
    case RegexKind::ParProd: return join("||", 3);
    case RegexKind::Alt: return join("|", 2);
    case RegexKind::CloseSeq: return wrap(kids[0], 4) + "*";
    case RegexKind::ClosePar: return wrap(kids[0], 4) + "^";
    case RegexKind::CloseSp: return wrap(kids[0], 4) + "@";
  }
  return {};
}

}  // namespace

Regex::Regex() : Regex(empty_set()) {}

Regex Regex::empty_set() {
  static const Regex r(make_node(RegexKind::EmptySet, 0, {}));
  return r;
}
Regex Regex::eps() {
  static const Regex r(make_node(RegexKind::Eps, 0, {}));
  return r;
}
Regex Regex::atom(char symbol) { return Regex(make_node(RegexKind::Atom, symbol, {})); }

Regex Regex::variadic(RegexKind kind, std::vector<Regex> children) {
  std::vector<Regex> flat;
  for (Regex& c : children) {
    if (c.kind() == kind) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) throw Error("variadic regex node needs at least one child");
  if (flat.size() == 1) return flat.front();
  return Regex(make_node(kind, 0, std::move(flat)));
}

Regex Regex::unary(RegexKind kind, Regex inner) { return Regex(make_node(kind, 0, {std::move(inner)})); }

Regex Regex::cat(std::vector<Regex> children) { return variadic(RegexKind::Cat, std::move(children)); }
Regex Regex::alt(std::vector<Regex> children) { return variadic(RegexKind::Alt, std::move(children)); }
Regex Regex::par(std::vector<Regex> children) { return variadic(RegexKind::ParProd, std::move(children)); }
Regex Regex::close_seq(Regex inner) { return unary(RegexKind::CloseSeq, std::move(inner)); }
Regex Regex::close_par(Regex inner) { return unary(RegexKind::ClosePar, std::move(inner)); }
Regex Regex::close_sp(Regex inner) { return unary(RegexKind::CloseSp, std::move(inner)); }

RegexKind Regex::kind() const noexcept { return node_->kind; }
char Regex::symbol() const noexcept { return node_->symbol; }
std::span<const Regex> Regex::children() const noexcept { return node_->children; }
const std::string& Regex::text() const noexcept { return node_->text; }
std::size_t Regex::size() const noexcept { return node_->size; }

std::shared_ptr<const Regex::Node> Regex::make_node(RegexKind kind, char symbol, std::vector<Regex> kids) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->symbol = symbol;
  n->text = render(kind, symbol, kids);
  for (const Regex& k : kids) n->size += k.size();
  n->children = std::move(kids);
  return n;
}

namespace {

// ---------------------------------------------------------------------------

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  Regex parse() {
    Regex r = parse_alt();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  // `|` that does not start `||`
  bool at_alt() const { return peek("|") && !peek("||"); }

  Regex parse_alt() {
    std::vector<Regex> parts{parse_par()};
    while (true) {
      skip_ws();
      if (!at_alt()) break;
      ++pos_;
      parts.push_back(parse_par());
    }
    return Regex::alt(std::move(parts));
  }

  Regex parse_par() {
    std::vector<Regex> parts{parse_cat()};
    while (true) {
      skip_ws();
      if (!peek("||")) break;
      pos_ += 2;
      parts.push_back(parse_cat());
    }
    return Regex::par(std::move(parts));
  }

  Regex parse_cat() {
    std::vector<Regex> parts{parse_postfix()};
    while (true) {
      skip_ws();
      if (!peek(".")) break;
      ++pos_;
      parts.push_back(parse_postfix());
    }
    return Regex::cat(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_prim();
    while (true) {
      skip_ws();
      if (peek("*")) {
        r = Regex::close_seq(std::move(r));
      } else if (peek("^")) {
        r = Regex::close_par(std::move(r));
      } else if (peek("@")) {
        r = Regex::close_sp(std::move(r));
      } else {
        break;
      }
      ++pos_;
    }
    return r;
  }

  Regex parse_prim() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Regex inner = parse_alt();
      skip_ws();
      if (!peek(")")) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek("eps")) {
      pos_ += 3;
      return Regex::eps();
    }
    if (c == '0') {
      ++pos_;
      return Regex::empty_set();
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Regex::atom(c);
    }
    fail("unknown character '" + std::string(1, c) + "'");
  }

  bool peek(std::string_view tok) const { return text_.substr(pos_).starts_with(tok); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text) { return RegexParser(text).parse(); }

// ---------------------------------------------------------------------------
// Matching

namespace {

std::vector<Term> list_of(const Term& t, Kind kind) {
  if (t.is_eps()) return {};
  if (t.kind() == kind) return {t.children().begin(), t.children().end()};
  return {t};
}

Term slice(const std::vector<Term>& items, std::size_t begin, std::size_t end, Kind kind) {
  std::vector<Term> part(items.begin() + static_cast<std::ptrdiff_t>(begin),
                         items.begin() + static_cast<std::ptrdiff_t>(end));
  return kind == Kind::Seq ? Term::seq(std::move(part)) : Term::par(std::move(part));
}

// Sorted multiset of terms as (distinct value, multiplicity).
using Bag = std::vector<std::pair<Term, std::size_t>>;

Bag to_bag(const std::vector<Term>& sorted) {
  Bag bag;
  for (const Term& t : sorted) {
    if (!bag.empty() && bag.back().first == t) {
      ++bag.back().second;
    } else {
      bag.emplace_back(t, 1);
    }
  }
  return bag;
}

std::vector<Term> from_bag(const Bag& bag) {
  std::vector<Term> out;
  for (const auto& [t, n] : bag) out.insert(out.end(), n, t);
  return out;
}

// Calls `fn(chosen, rest)` for every sub-multiset of `bag`. With
// `must_take_first`, only sub-multisets holding at least one copy of the
// first distinct element are produced.
void for_each_submultiset(const Bag& bag, bool must_take_first,
                          const std::function<bool(const std::vector<Term>&, const std::vector<Term>&)>& fn) {
  std::vector<std::size_t> take(bag.size(), 0);
  if (must_take_first && !bag.empty()) take[0] = 1;
  while (true) {
    std::vector<Term> chosen;
    std::vector<Term> rest;
    for (std::size_t i = 0; i < bag.size(); ++i) {
      chosen.insert(chosen.end(), take[i], bag[i].first);
      rest.insert(rest.end(), bag[i].second - take[i], bag[i].first);
    }
    if (fn(chosen, rest)) return;
    std::size_t i = 0;
    while (i < bag.size()) {
      std::size_t lo = (must_take_first && i == 0) ? 1 : 0;
      if (take[i] < bag[i].second) {
        ++take[i];
        break;
      }
      take[i] = lo;
      ++i;
    }
    if (i == bag.size()) return;
  }
}

class Matcher {
 public:
  explicit Matcher(Mode mode) : mode_(mode) {}

  bool match(const Regex& r, const Term& t) {
    auto key = std::make_pair(r.id(), t.text());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = compute(r, t);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  bool compute(const Regex& r, const Term& t) {
    switch (r.kind()) {
      case RegexKind::EmptySet: return false;
      case RegexKind::Eps: return t.is_eps();
      case RegexKind::Atom: return t.is_leaf() && t.symbol() == r.symbol();
      case RegexKind::Alt:
        return std::any_of(r.children().begin(), r.children().end(),
                           [&](const Regex& c) { return match(c, t); });
      case RegexKind::Cat: return factors_contiguous(r.children(), list_of(t, Kind::Seq), Kind::Seq);
      case RegexKind::ParProd:
        if (mode_ == Mode::Ordered) return factors_contiguous(r.children(), list_of(t, Kind::Par), Kind::Par);
        return factors_multiset(r.children(), 0, to_bag(list_of(t, Kind::Par)));
      case RegexKind::CloseSeq: return t.is_eps() || iterate_contiguous(r.inner(), list_of(t, Kind::Seq), Kind::Seq);
      case RegexKind::ClosePar:
        if (t.is_eps()) return true;
        if (mode_ == Mode::Ordered) return iterate_contiguous(r.inner(), list_of(t, Kind::Par), Kind::Par);
        return iterate_multiset(r.inner(), to_bag(list_of(t, Kind::Par)));
      case RegexKind::CloseSp: {
        // Both closures of the same body; rebuilt once per node and cached.
        auto& pair = sp_parts_[r.id()];
        if (pair.empty()) pair = {Regex::close_seq(r.inner()), Regex::close_par(r.inner())};
        return match(pair[0], t) || match(pair[1], t);
      }
    }
    return false;
  }

  // Factors matched, in order, against consecutive (possibly empty) slices.
  bool factors_contiguous(std::span<const Regex> factors, const std::vector<Term>& items, Kind kind) {
    std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t f, std::size_t begin) -> bool {
      if (f + 1 == factors.size()) return match(factors[f], slice(items, begin, items.size(), kind));
      for (std::size_t end = begin; end <= items.size(); ++end) {
        if (match(factors[f], slice(items, begin, end, kind)) && go(f + 1, end)) return true;
      }
      return false;
    };
    return go(0, 0);
  }

  bool factors_multiset(std::span<const Regex> factors, std::size_t f, const Bag& remaining) {
    if (f + 1 == factors.size()) return match(factors[f], Term::par(from_bag(remaining)));
    bool found = false;
    for_each_submultiset(remaining, false, [&](const std::vector<Term>& chosen, const std::vector<Term>& rest) {
      found = match(factors[f], Term::par(chosen)) && factors_multiset(factors, f + 1, to_bag(rest));
      return found;
    });
    return found;
  }

  // One or more nonempty consecutive slices, each matching `body`.
  bool iterate_contiguous(const Regex& body, const std::vector<Term>& items, Kind kind) {
    std::vector<int> done(items.size() + 1, -1);
    std::function<bool(std::size_t)> go = [&](std::size_t begin) -> bool {
      if (begin == items.size()) return true;
      if (done[begin] >= 0) return done[begin] != 0;
      bool ok = false;
      for (std::size_t end = begin + 1; end <= items.size() && !ok; ++end) {
        ok = match(body, slice(items, begin, end, kind)) && go(end);
      }
      done[begin] = ok ? 1 : 0;
      return ok;
    };
    return go(0);
  }

  // Partition into nonempty blocks each matching `body`; the block holding
  // the first remaining element is chosen first so each partition is seen once.
  bool iterate_multiset(const Regex& body, const Bag& remaining) {
    if (remaining.empty()) return true;
    bool found = false;
    for_each_submultiset(remaining, true, [&](const std::vector<Term>& chosen, const std::vector<Term>& rest) {
      found = match(body, Term::par(chosen)) && iterate_multiset(body, to_bag(rest));
      return found;
    });
    return found;
  }

  Mode mode_;
  std::map<std::pair<const void*, std::string>, bool> memo_;
  std::unordered_map<const void*, std::vector<Regex>> sp_parts_;
};

}  // namespace

bool matches(const Regex& r, const Term& t, Mode mode) {
  Matcher m(mode);
  return m.match(r, canonicalize(t, mode));
}

FiniteLang regex_enumerate(const Regex& r, std::string_view alphabet, std::size_t max_atoms, Mode mode,
                           std::size_t cap) {
  FiniteLang universe = enumerate_terms(alphabet, max_atoms, mode, cap);
  Matcher m(mode);
  std::vector<Term> out;
  for (const Term& t : universe)
    if (m.match(r, t)) out.push_back(t);
  return FiniteLang(mode, std::move(out));
}

std::string regex_alphabet(const Regex& r) {
  std::string out;
  std::function<void(const Regex&)> walk = [&](const Regex& x) {
    if (x.kind() == RegexKind::Atom) out += x.symbol();
    for (const Regex& c : x.children()) walk(c);
  };
  walk(r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_parallel_fragment(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::Atom:
    case RegexKind::Eps: return true;
    case RegexKind::Alt:
    case RegexKind::ParProd:
    case RegexKind::ClosePar:
      return std::all_of(r.children().begin(), r.children().end(), in_parallel_fragment);
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Parallel fragment -> parallel-linear grammar

namespace {

// Each occurrence of a subexpression gets a nonterminal deriving "a word of
// the subexpression, then whatever its continuation derives". Continuations
// are another nonterminal or the end of the word.
class LinearBuilder {
 public:
  static constexpr int kEnd = -1;

  struct Rule {
    enum class Type { Eps, Unit, Atom } type;
    char atom = 0;
    int target = kEnd;  // Unit: the nonterminal; Atom: continuation or kEnd

    friend bool operator==(const Rule&, const Rule&) = default;
  };

  int build(const Regex& r, int cont) {
    int n = fresh();
    switch (r.kind()) {
      case RegexKind::Atom: add(n, {Rule::Type::Atom, r.symbol(), cont}); break;
      case RegexKind::Eps: exit_to(n, cont); break;
      case RegexKind::Alt:
        for (const Regex& c : r.children()) add(n, {Rule::Type::Unit, 0, build(c, cont)});
        break;
      case RegexKind::ParProd: {
        int k = cont;
        for (auto it = r.children().rbegin(); it != r.children().rend(); ++it) k = build(*it, k);
        add(n, {Rule::Type::Unit, 0, k});
        break;
      }
      case RegexKind::ClosePar:
        exit_to(n, cont);
        add(n, {Rule::Type::Unit, 0, build(r.inner(), n)});
        break;
      default: throw FragmentError("'" + r.text() + "' is outside the parallel fragment");
    }
    return n;
  }

  Grammar finish(int root) {
    eliminate_units();
    std::vector<int> order = reachable_from(root);
    prune_unproductive(order);
    if (rules_[root].empty()) throw FragmentError("expression denotes the empty language");
    std::map<int, char> names;
    static constexpr std::string_view kLetters = "ABCDEFGHIJKLMNOPQRTUVWXYZ";
    std::size_t next = 0;
    for (int n : order) {
      if (rules_[n].empty()) continue;
      if (n == root) {
        names[n] = 'S';
      } else {
        if (next >= kLetters.size()) throw ResourceLimit("expression needs more than 26 nonterminals");
        names[n] = kLetters[next++];
      }
    }
    std::vector<Production> prods;
    for (int n : order) {
      for (const Rule& rule : rules_[n]) {
        Term rhs;
        if (rule.type == Rule::Type::Atom) {
          rhs = rule.target == kEnd ? Term::leaf(rule.atom)
                                    : Term::par({Term::leaf(rule.atom), Term::leaf(names.at(rule.target))});
        }
        prods.push_back({names.at(n), rhs});
      }
    }
    return Grammar::from_productions(std::move(prods));
  }

 private:
  int fresh() {
    rules_.emplace_back();
    return static_cast<int>(rules_.size()) - 1;
  }

  void add(int n, Rule rule) {
    auto& rs = rules_[n];
    if (std::find(rs.begin(), rs.end(), rule) == rs.end()) rs.push_back(rule);
  }

  void exit_to(int n, int cont) {
    if (cont == kEnd) {
      add(n, {Rule::Type::Eps, 0, kEnd});
    } else {
      add(n, {Rule::Type::Unit, 0, cont});
    }
  }

  void eliminate_units() {
    std::vector<std::vector<Rule>> out(rules_.size());
    for (std::size_t n = 0; n < rules_.size(); ++n) {
      std::vector<bool> seen(rules_.size(), false);
      std::vector<int> stack{static_cast<int>(n)};
      seen[n] = true;
      while (!stack.empty()) {
        int m = stack.back();
        stack.pop_back();
        for (const Rule& r : rules_[m]) {
          if (r.type == Rule::Type::Unit) {
            if (!seen[r.target]) {
              seen[r.target] = true;
              stack.push_back(r.target);
            }
          } else if (std::find(out[n].begin(), out[n].end(), r) == out[n].end()) {
            out[n].push_back(r);
          }
        }
      }
    }
    rules_ = std::move(out);
  }

  std::vector<int> reachable_from(int root) const {
    std::vector<int> order{root};
    std::set<int> seen{root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const Rule& r : rules_[order[i]]) {
        if (r.type == Rule::Type::Atom && r.target != kEnd && seen.insert(r.target).second) {
          order.push_back(r.target);
        }
      }
    }
    return order;
  }

  void prune_unproductive(const std::vector<int>& order) {
    std::set<int> productive;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int n : order) {
        if (productive.count(n)) continue;
        for (const Rule& r : rules_[n]) {
          if (r.target == kEnd || productive.count(r.target)) {
            productive.insert(n);
            changed = true;
            break;
          }
        }
      }
    }
    for (int n : order) {
      auto& rs = rules_[n];
      rs.erase(std::remove_if(rs.begin(), rs.end(),
                              [&](const Rule& r) { return r.target != kEnd && !productive.count(r.target); }),
               rs.end());
    }
  }

  std::vector<std::vector<Rule>> rules_;
};

}  // namespace

Grammar to_parallel_linear_grammar(const Regex& r) {
  if (!in_parallel_fragment(r)) throw FragmentError("'" + r.text() + "' is outside the parallel fragment");
  LinearBuilder b;
  int root = b.build(r, LinearBuilder::kEnd);
  return b.finish(root);
}

}  // namespace spw
