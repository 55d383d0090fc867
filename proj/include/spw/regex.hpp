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

#ifndef SPW_REGEX_HPP
#define SPW_REGEX_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spw/grammar.hpp"
#include "spw/language.hpp"
#include "spw/term.hpp"

namespace spw {

enum class RegexKind : std::uint8_t {
  EmptySet,
  Eps,
  Atom,
  Cat,       // R1.R2...
  Alt,       // R1|R2...
  ParProd,   // R1||R2...
  CloseSeq,  // R*
  ClosePar,  // R^
  CloseSp,   // R@, the union of R* and R^
};

/// Immutable regular expression over series-parallel words. The variadic
/// constructors flatten same-kind children and collapse single-child lists.
class Regex {
 public:
  Regex();  // the empty set

  static Regex empty_set();
  static Regex eps();
  static Regex atom(char symbol);
  static Regex cat(std::vector<Regex> children);
  static Regex alt(std::vector<Regex> children);
  static Regex par(std::vector<Regex> children);
  static Regex close_seq(Regex inner);
  static Regex close_par(Regex inner);
  static Regex close_sp(Regex inner);

  RegexKind kind() const noexcept;
  char symbol() const noexcept;
  std::span<const Regex> children() const noexcept;
  const Regex& inner() const noexcept { return children().front(); }
  const std::string& text() const noexcept;
  /// Number of AST nodes.
  std::size_t size() const noexcept;
  /// Stable identity of the node, for memo tables.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Regex& a, const Regex& b) noexcept { return a.text() == b.text(); }

 private:
  struct Node;
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Regex variadic(RegexKind kind, std::vector<Regex> children);
  static Regex unary(RegexKind kind, Regex inner);
  static std::shared_ptr<const Node> make_node(RegexKind kind, char symbol, std::vector<Regex> children);
  std::shared_ptr<const Node> node_;
};

/// Atoms a-z, `eps`, `0`; postfix `*` `^` `@`; infix `.`, `||`, `|` in
/// decreasing precedence; parentheses.
Regex parse_regex(std::string_view text);
inline const std::string& format_regex(const Regex& r) { return r.text(); }

/// Structural match of a canonical term. `t` is canonicalized for `mode`
/// first; in COMMUTATIVE mode parallel factors may take any sub-multiset of
/// the branches, in ORDERED mode only contiguous runs.
bool matches(const Regex& r, const Term& t, Mode mode);

/// Members of enumerate_terms(alphabet, max_atoms, mode) matched by `r`.
FiniteLang regex_enumerate(const Regex& r, std::string_view alphabet, std::size_t max_atoms, Mode mode,
                           std::size_t cap = kDefaultCap);

/// Lowercase letters occurring in `r`, sorted.
std::string regex_alphabet(const Regex& r);

/// True when `r` uses only atoms, eps, `|`, `||` and `^`.
bool in_parallel_fragment(const Regex& r);

/// Parallel-linear grammar generating the language of a parallel-fragment
/// expression. Every production has the form S -> a||N, S -> a or S -> eps.
/// Throws FragmentError outside the fragment.
Grammar to_parallel_linear_grammar(const Regex& r);

}  // namespace spw

#endif  // SPW_REGEX_HPP
