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

#ifndef SPW_TERM_HPP
#define SPW_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spw {

/// How `||` is compared. ORDERED keeps branch order significant; COMMUTATIVE
/// identifies parallel compositions up to reordering of their branches.
enum class Mode : std::uint8_t { Ordered, Commutative };

std::string_view to_string(Mode mode);

enum class Kind : std::uint8_t { Eps, Leaf, Seq, Par };

/// Immutable series-parallel term. Leaves are single letters: lowercase
/// letters are atoms, uppercase letters are grammar nonterminals (they only
/// occur in sentential forms).
///
/// `seq` and `par` are normalizing constructors: they flatten nested
/// same-kind children, drop `eps` children and collapse single-child lists,
/// so every term built through them is canonical in ORDERED mode. `raw`
/// builds the node exactly as given and exists for feeding `canonicalize`.
///
/// Every node caches its serialization; equality and ordering are defined on
/// it, which is the canonical total order on terms.
class Term {
 public:
  Term();

  static Term eps();
  static Term leaf(char symbol);
  static Term seq(std::vector<Term> children);
  static Term par(std::vector<Term> children);
  static Term raw(Kind kind, std::vector<Term> children);

  Kind kind() const noexcept;
  bool is_eps() const noexcept { return kind() == Kind::Eps; }
  bool is_leaf() const noexcept { return kind() == Kind::Leaf; }
  /// Meaningful for leaves only.
  char symbol() const noexcept;
  std::span<const Term> children() const noexcept;
  const std::string& text() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the term text format. With `allow_nonterminals` uppercase letters
/// are accepted as leaves (grammar right-hand sides).
Term parse_term(std::string_view text, bool allow_nonterminals = false);

/// Minimal-parenthesization serialization; identical to `t.text()`.
inline const std::string& format_term(const Term& t) { return t.text(); }

Term canonicalize(const Term& t, Mode mode);

/// Sequential extent: 0 for eps, 1 per leaf, summed over `.`, max over `||`.
std::size_t length(const Term& t);
/// Parallel width: 0 for eps, 1 per leaf, max over `.`, summed over `||`.
std::size_t depth(const Term& t);

/// Reverses every sequential composition; parallel branch order is kept.
Term reverse(const Term& t);

std::size_t atoms_count(const Term& t);
using AtomMultiset = std::map<char, std::size_t>;
AtomMultiset atoms_multiset(const Term& t);

enum class TermClass : std::uint8_t { Sequential, Parallel, Mixed };
std::string_view to_string(TermClass c);

/// Membership flags. An atom (and eps) is both a sequential and a parallel
/// word.
struct TermShape {
  bool sequential = false;  // no `||` node: member of the sequential words
  bool parallel = false;    // eps, an atom, or `||` of atoms only
};
TermShape term_shape(const Term& t);

/// Single-valued classification; terms that are both sequential and
/// parallel (eps and atoms) report Sequential.
TermClass classify_term(const Term& t);

}  // namespace spw

#endif  // SPW_TERM_HPP
