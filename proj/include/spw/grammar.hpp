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

#ifndef SPW_GRAMMAR_HPP
#define SPW_GRAMMAR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spw/language.hpp"
#include "spw/term.hpp"

namespace spw {

inline bool is_terminal(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_nonterminal(char c) { return c >= 'A' && c <= 'Z'; }

/// A -> rhs, where rhs is a sentential form: a term whose leaves mix
/// terminals (lowercase) and nonterminals (uppercase).
struct Production {
  char lhs = 'S';
  Term rhs;

  friend bool operator==(const Production&, const Production&) = default;
};

/// G = (V, T, P, S). V keeps first-appearance order, T is sorted.
class Grammar {
 public:
  /// Validates: P nonempty, S in V, every symbol used in P declared.
  Grammar(std::vector<char> nonterminals, std::string terminals, std::vector<Production> productions,
          char start);

  /// Derives V from the left-hand sides (in order) and T from the terminals
  /// used; the start symbol is the first production's lhs.
  static Grammar from_productions(std::vector<Production> productions);

  const std::vector<char>& nonterminals() const noexcept { return nonterminals_; }
  const std::string& terminals() const noexcept { return terminals_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  char start() const noexcept { return start_; }

  std::vector<Term> alternatives(char lhs) const;

  friend bool operator==(const Grammar&, const Grammar&) = default;

 private:
  std::vector<char> nonterminals_;
  std::string terminals_;
  std::vector<Production> productions_;
  char start_;
};

/// `A -> alt1 | alt2 | ...` per line, `#` comments, start = first lhs.
Grammar parse_grammar(std::string_view text);
/// Inverse of parse_grammar; one line per nonterminal in V order.
std::string format_grammar(const Grammar& g);

enum class ProductionShape : std::uint8_t {
  RightLinear,     // x.B with x a nonempty sequential terminal word
  LeftLinear,      // B.x
  ParallelLinear,  // x||B or B||x with x a nonempty parallel terminal word
  Terminal,        // no nonterminal at all (eps included)
  Other,
};
std::string_view to_string(ProductionShape shape);
ProductionShape production_shape(const Production& p);

namespace grammar_class {
inline constexpr std::uint32_t kCfSequential = 1u << 0;
inline constexpr std::uint32_t kCfParallel = 1u << 1;
inline constexpr std::uint32_t kCfSp = 1u << 2;
inline constexpr std::uint32_t kRightLinear = 1u << 3;
inline constexpr std::uint32_t kLeftLinear = 1u << 4;
inline constexpr std::uint32_t kParallelLinear = 1u << 5;
inline constexpr std::uint32_t kSpRegular = 1u << 6;
}  // namespace grammar_class

struct GrammarClass {
  std::uint32_t flags = 0;
  std::vector<ProductionShape> shapes;  // parallel to Grammar::productions()

  bool has(std::uint32_t flag) const noexcept { return (flags & flag) != 0; }
  /// Space-separated flag names in a fixed order.
  std::string names() const;
};

GrammarClass classify_grammar(const Grammar& g);

/// Derivation step budget used by membership: factor * atoms + offset.
struct StepBudget {
  std::size_t factor = 4;
  std::size_t offset = 8;

  std::size_t steps_for(std::size_t atoms) const noexcept { return factor * atoms + offset; }
};

/// Breadth-first derivation from S, expanding the leftmost nonterminal of
/// each sentential form by every alternative. Forms with more than
/// `max_atoms` terminals or reached after more than `max_steps` steps are
/// dropped. Returns the terminal words found, canonicalized for `mode`.
FiniteLang generate(const Grammar& g, std::size_t max_atoms, std::size_t max_steps, Mode mode,
                    std::size_t cap = kDefaultCap);

struct Membership {
  bool member = false;
  /// Sentential forms from S to the word; empty when not a member.
  std::vector<Term> trace;
};

/// Decides t in generate(g, atoms_count(t), budget.steps_for(atoms), mode).
Membership is_member(const Grammar& g, const Term& t, Mode mode, StepBudget budget = {},
                     std::size_t cap = kDefaultCap);

/// Seeded random parallel-linear grammar over {a,b}: 1-3 nonterminals drawn
/// from S, A, B with 1-3 productions each. Output depends only on `seed`.
Grammar random_parallel_linear_grammar(std::uint64_t seed);

}  // namespace spw

#endif  // SPW_GRAMMAR_HPP
