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

#include "spw/term.hpp"

#include <algorithm>
#include <cctype>

#include "spw/error.hpp"

namespace spw {

std::string_view to_string(Mode mode) {
  return mode == Mode::Ordered ? "ordered" : "commutative";
}

std::string_view to_string(TermClass c) {
  switch (c) {
    case TermClass::Sequential: return "SEQUENTIAL";
    case TermClass::Parallel: return "PARALLEL";
    case TermClass::Mixed: return "MIXED";
  }
  return "MIXED";
}

struct Term::Node {
  Kind kind = Kind::Eps;
  char symbol = 0;
  std::vector<Term> children;
  std::string text;
};

namespace {

std::string render(Kind kind, char symbol, const std::vector<Term>& children) {
  switch (kind) {
    case Kind::Eps: return "eps";
    case Kind::Leaf: return std::string(1, symbol);
    case Kind::Seq: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += '.';
        const Term& c = children[i];
        if (c.kind() == Kind::Par) {
          out += '(';
          out += c.text();
          out += ')';
        } else {
          out += c.text();
        }
      }
      return out;
    }
    case Kind::Par: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += "||";
        out += children[i].text();
      }
      return out;
    }
  }
  return {};
}

}  // namespace

Term::Term() : node_(Term::eps().node_) {}

Term Term::eps() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->text = "eps";
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return Term(node);
}

Term Term::leaf(char symbol) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->symbol = symbol;
  n->text = std::string(1, symbol);
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::raw(Kind kind, std::vector<Term> children) {
  if (kind == Kind::Eps) return eps();
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->text = render(kind, 0, children);
  n->children = std::move(children);
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

Term build_flat(Kind kind, std::vector<Term> children) {
  std::vector<Term> flat;
  flat.reserve(children.size());
  for (auto& c : children) {
    if (c.is_eps()) continue;
    if (c.kind() == kind) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return Term::eps();
  if (flat.size() == 1) return flat.front();
  return Term::raw(kind, std::move(flat));
}

}  // namespace

Term Term::seq(std::vector<Term> children) { return build_flat(Kind::Seq, std::move(children)); }
Term Term::par(std::vector<Term> children) { return build_flat(Kind::Par, std::move(children)); }

Kind Term::kind() const noexcept { return node_->kind; }
char Term::symbol() const noexcept { return node_->symbol; }
std::span<const Term> Term::children() const noexcept { return node_->children; }
const std::string& Term::text() const noexcept { return node_->text; }

bool operator==(const Term& a, const Term& b) noexcept {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return a.node_->text <=> b.node_->text;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, bool allow_nonterminals)
      : text_(text), allow_nt_(allow_nonterminals) {}

  Term parse() {
    Term t = parse_par();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  Term parse_par() {
    std::vector<Term> parts{parse_seq()};
    while (true) {
      skip_ws();
      if (!text_.substr(pos_).starts_with("||")) break;
      pos_ += 2;
      parts.push_back(parse_seq());
    }
    return Term::par(std::move(parts));
  }

  Term parse_seq() {
    std::vector<Term> parts{parse_prim()};
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '.') break;
      ++pos_;
      parts.push_back(parse_prim());
    }
    return Term::seq(std::move(parts));
  }

  Term parse_prim() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term inner = parse_par();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (text_.substr(pos_).starts_with("eps")) {
      pos_ += 3;
      return Term::eps();
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      return Term::leaf(c);
    }
    if (allow_nt_ && c >= 'A' && c <= 'Z') {
      ++pos_;
      return Term::leaf(c);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && !allow_nt_) {
      fail("nonterminal '" + std::string(1, c) + "' not allowed in a term");
    }
    fail("unknown character '" + std::string(1, c) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  std::string_view text_;
  bool allow_nt_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, bool allow_nonterminals) {
  return TermParser(text, allow_nonterminals).parse();
}

// ---------------------------------------------------------------------------
// Structure

Term canonicalize(const Term& t, Mode mode) {
  if (t.kind() == Kind::Eps || t.kind() == Kind::Leaf) return t;
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const Term& c : t.children()) kids.push_back(canonicalize(c, mode));
  if (t.kind() == Kind::Seq) return Term::seq(std::move(kids));
  Term flat = Term::par(std::move(kids));
  if (mode == Mode::Ordered || flat.kind() != Kind::Par) return flat;
  if (std::is_sorted(flat.children().begin(), flat.children().end())) return flat;
  std::vector<Term> sorted(flat.children().begin(), flat.children().end());
  std::sort(sorted.begin(), sorted.end());
  return Term::raw(Kind::Par, std::move(sorted));
}

std::size_t length(const Term& t) {
  switch (t.kind()) {
    case Kind::Eps: return 0;
    case Kind::Leaf: return 1;
    case Kind::Seq: {
      std::size_t sum = 0;
      for (const Term& c : t.children()) sum += length(c);
      return sum;
    }
    case Kind::Par: {
      std::size_t best = 0;
      for (const Term& c : t.children()) best = std::max(best, length(c));
      return best;
    }
  }
  return 0;
}

std::size_t depth(const Term& t) {
  switch (t.kind()) {
    case Kind::Eps: return 0;
    case Kind::Leaf: return 1;
    case Kind::Seq: {
      std::size_t best = 0;
      for (const Term& c : t.children()) best = std::max(best, depth(c));
      return best;
    }
    case Kind::Par: {
      std::size_t sum = 0;
      for (const Term& c : t.children()) sum += depth(c);
      return sum;
    }
  }
  return 0;
}

Term reverse(const Term& t) {
  if (t.kind() == Kind::Eps || t.kind() == Kind::Leaf) return t;
  std::vector<Term> kids;
  kids.reserve(t.children().size());
  for (const Term& c : t.children()) kids.push_back(reverse(c));
  if (t.kind() == Kind::Seq) std::reverse(kids.begin(), kids.end());
  return Term::raw(t.kind(), std::move(kids));
}

std::size_t atoms_count(const Term& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const Term& c : t.children()) n += atoms_count(c);
  return n;
}

namespace {
void collect_atoms(const Term& t, AtomMultiset& out) {
  if (t.is_leaf()) {
    ++out[t.symbol()];
    return;
  }
  for (const Term& c : t.children()) collect_atoms(c, out);
}

bool has_kind(const Term& t, Kind k) {
  if (t.kind() == k) return true;
  for (const Term& c : t.children())
    if (has_kind(c, k)) return true;
  return false;
}
}  // namespace

AtomMultiset atoms_multiset(const Term& t) {
  AtomMultiset out;
  collect_atoms(t, out);
  return out;
}

TermShape term_shape(const Term& t) {
  TermShape s;
  s.sequential = !has_kind(t, Kind::Par);
  switch (t.kind()) {
    case Kind::Eps:
    case Kind::Leaf: s.parallel = true; break;
    case Kind::Seq: s.parallel = false; break;
    case Kind::Par:
      s.parallel = std::all_of(t.children().begin(), t.children().end(),
                               [](const Term& c) { return c.is_leaf(); });
      break;
  }
  return s;
}

TermClass classify_term(const Term& t) {
  TermShape s = term_shape(t);
  if (s.sequential) return TermClass::Sequential;
  if (s.parallel) return TermClass::Parallel;
  return TermClass::Mixed;
}

}  // namespace spw
