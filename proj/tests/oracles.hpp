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

// Test-only reference implementations. Nothing here calls into the code paths
// it is used to check: the term universe is built from binary products, and
// the regex matcher works from product decompositions instead of slicing.
#ifndef SPW_TESTS_ORACLES_HPP
#define SPW_TESTS_ORACLES_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spw/language.hpp"
#include "spw/regex.hpp"
#include "spw/term.hpp"

namespace spw::oracle {

/// Terms built as every binary seq/par product of smaller terms, then
/// canonicalized and deduplicated. Sorted by text.
std::vector<Term> binary_universe(std::string_view alphabet, std::size_t max_atoms, Mode mode);

/// Language from term texts, e.g. lang(Mode::Ordered, {"a||b", "eps"}).
FiniteLang lang(Mode mode, std::vector<std::string_view> texts);

/// Every regex over `alphabet` with exactly `nodes` AST nodes (after
/// flattening), deduplicated by text.
std::vector<Regex> regexes_of_size(std::string_view alphabet, std::size_t nodes);
std::vector<Regex> regexes_up_to(std::string_view alphabet, std::size_t max_nodes);

/// Exponential reference matcher over a fixed universe: x.y and x||y are
/// looked up in precomputed product tables, closures unfold one factor at a
/// time. No memoization.
class NaiveMatcher {
 public:
  NaiveMatcher(std::string_view alphabet, std::size_t max_atoms, Mode mode);

  bool match(const Regex& r, const Term& t) const;
  const std::vector<Term>& universe() const { return universe_; }

 private:
  using Splits = std::vector<std::pair<Term, Term>>;
  const Splits& splits(const std::map<std::string, Splits>& table, const Term& t) const;
  bool factors(std::span<const Regex> rs, const Term& t, const std::map<std::string, Splits>& table) const;
  bool iterate(const Regex& closure, const Regex& body, const Term& t,
               const std::map<std::string, Splits>& table) const;

  Mode mode_;
  std::vector<Term> universe_;
  std::map<std::string, Splits> seq_splits_;
  std::map<std::string, Splits> par_splits_;
};

}  // namespace spw::oracle

#endif  // SPW_TESTS_ORACLES_HPP
