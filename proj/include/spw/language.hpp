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

#ifndef SPW_LANGUAGE_HPP
#define SPW_LANGUAGE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spw/term.hpp"

namespace spw {

/// Default bound on the size of any enumerated or computed language.
inline constexpr std::size_t kDefaultCap = 200000;

/// Finite set of canonical terms under one semantics mode. Members are kept
/// sorted by the canonical total order and free of duplicates.
class FiniteLang {
 public:
  explicit FiniteLang(Mode mode = Mode::Ordered) : mode_(mode) {}
  /// Canonicalizes every member for `mode`, then sorts and deduplicates.
  FiniteLang(Mode mode, std::vector<Term> terms);

  Mode mode() const noexcept { return mode_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  /// `t` is canonicalized for this language's mode before lookup.
  bool contains(const Term& t) const;

  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  friend bool operator==(const FiniteLang&, const FiniteLang&) = default;

 private:
  Mode mode_;
  std::vector<Term> terms_;
};

FiniteLang concat_lang(const FiniteLang& l1, const FiniteLang& l2);
FiniteLang par_lang(const FiniteLang& l1, const FiniteLang& l2);
FiniteLang union_lang(const FiniteLang& l1, const FiniteLang& l2);

enum class ProductKind : std::uint8_t { Seq, Par };

/// n-fold product of `l` with itself; n = 0 gives {eps}.
FiniteLang power(const FiniteLang& l, std::size_t n, ProductKind kind);

enum class Closure : std::uint8_t {
  Star,      // union of sequential powers
  ParOplus,  // union of parallel powers
  SpOtimes,  // Star together with ParOplus
};

/// Closure truncated to powers 0..n_max.
FiniteLang kleene_bounded(const FiniteLang& l, Closure kind, std::size_t n_max);

FiniteLang reverse_lang(const FiniteLang& l);

/// Outcome of a language comparison. Witness lists are capped at
/// kMaxWitnesses each; the counts are exact.
struct LangDiff {
  static constexpr std::size_t kMaxWitnesses = 20;

  bool equal = true;
  std::vector<Term> only_left;
  std::vector<Term> only_right;
  std::size_t only_left_count = 0;
  std::size_t only_right_count = 0;

  explicit operator bool() const noexcept { return equal; }
};

LangDiff lang_equal(const FiniteLang& l1, const FiniteLang& l2);

/// Human-readable symmetric difference, one witness per line.
std::string describe(const LangDiff& diff);

/// Language file: optional `mode: ordered|commutative` header, then one term
/// per line; `#` starts a comment. Without a header `default_mode` is used.
FiniteLang parse_language(std::string_view text, Mode default_mode = Mode::Ordered);
std::string format_language(const FiniteLang& l);

Mode parse_mode(std::string_view name);

}  // namespace spw

#endif  // SPW_LANGUAGE_HPP
