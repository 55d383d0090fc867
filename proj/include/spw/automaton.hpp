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

#ifndef SPW_AUTOMATON_HPP
#define SPW_AUTOMATON_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spw/grammar.hpp"
#include "spw/language.hpp"
#include "spw/term.hpp"

namespace spw {

using StateId = std::string;

struct SeqTransition {
  StateId from;
  char label = 'a';
  StateId to;

  friend bool operator==(const SeqTransition&, const SeqTransition&) = default;
};

/// from -> {targets}; targets is a multiset with at least two elements.
struct ForkTransition {
  std::string id;
  StateId from;
  std::vector<StateId> targets;

  friend bool operator==(const ForkTransition&, const ForkTransition&) = default;
};

/// {sources} -> to; sources is a multiset with at least two elements.
struct JoinTransition {
  std::string id;
  std::vector<StateId> sources;
  StateId to;

  friend bool operator==(const JoinTransition&, const JoinTransition&) = default;
};

/// Admissible parallel words of a parallel transition: anything, or a set of
/// atom multisets (a flat parallel word is identified with its multiset).
struct ParGuard {
  bool any = true;
  std::set<AtomMultiset> words;

  static ParGuard anything() { return {}; }
  static ParGuard of(std::set<AtomMultiset> words) { return {false, std::move(words)}; }

  /// `t` is the whole parallel term the transition consumes.
  bool admits(const Term& t) const;

  friend bool operator==(const ParGuard&, const ParGuard&) = default;
};

struct ParTransition {
  std::string fork;
  ParGuard guard;
  std::string join;

  friend bool operator==(const ParTransition&, const ParTransition&) = default;
};

/// A = (Q, T_seq, T_fork, T_join, T_par, S, E). Construct through the
/// validating constructor; instances are immutable afterwards.
class BranchingAutomaton {
 public:
  struct Parts {
    std::vector<StateId> states;
    std::vector<StateId> initial;
    std::vector<StateId> final;
    std::vector<SeqTransition> seq;
    std::vector<ForkTransition> forks;
    std::vector<JoinTransition> joins;
    std::vector<ParTransition> pars;

    friend bool operator==(const Parts&, const Parts&) = default;
  };

  /// Throws ValidationError on undeclared states, duplicate ids, fork/join
  /// cardinality below two, dangling par references and forks or joins no
  /// par transition uses.
  explicit BranchingAutomaton(Parts parts);

  const Parts& parts() const noexcept { return parts_; }
  const std::vector<StateId>& states() const noexcept { return parts_.states; }
  const std::vector<StateId>& initial() const noexcept { return parts_.initial; }
  const std::vector<StateId>& final_states() const noexcept { return parts_.final; }

  const ForkTransition& fork(std::string_view id) const;
  const JoinTransition& join(std::string_view id) const;
  bool has_state(std::string_view s) const;

  /// Seq labels, sorted and deduplicated.
  std::string alphabet() const;

  friend bool operator==(const BranchingAutomaton& a, const BranchingAutomaton& b) { return a.parts_ == b.parts_; }

 private:
  Parts parts_;
};

BranchingAutomaton parse_automaton(std::string_view text);
std::string serialize_automaton(const BranchingAutomaton& a);

/// Called for every par transition fired on a term during run search.
using ParObserver = std::function<void(std::size_t par_index, const Term& consumed)>;

/// Run search with a memo table shared across queries. Terms are
/// canonicalized in COMMUTATIVE mode before use.
class RunSearch {
 public:
  explicit RunSearch(const BranchingAutomaton& a, ParObserver observer = {});
  ~RunSearch();
  RunSearch(const RunSearch&) = delete;
  RunSearch& operator=(const RunSearch&) = delete;

  /// Every q such that some run on t leads from p to q.
  std::set<StateId> runs_between(const StateId& p, const Term& t);
  bool accepts(const Term& t);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::set<StateId> runs_between(const BranchingAutomaton& a, const StateId& p, const Term& t);
bool accepts(const BranchingAutomaton& a, const Term& t);

/// Branching automaton for a parallel-linear grammar. Each nonterminal V
/// gets states entry_V and ret_V; V -> x||W becomes a fork from entry_V into
/// one branch per atom of x plus entry_W, joined into ret_V. Throws
/// NotParallelLinear for any other grammar.
BranchingAutomaton from_linear_grammar(const Grammar& g);

/// Members of enumerate_terms(alphabet, max_atoms, COMMUTATIVE) accepted by `a`.
FiniteLang enumerate_accepted(const BranchingAutomaton& a, std::string_view alphabet, std::size_t max_atoms,
                              std::size_t cap = kDefaultCap);

/// Bounded comparison of a parallel-linear grammar with an automaton: the
/// grammar's words (canonicalized commutatively) against the automaton's
/// accepted terms over the grammar's terminals, both up to `max_atoms`.
/// The left side of the diff is the grammar.
LangDiff bounded_equivalence(const Grammar& g, const BranchingAutomaton& a, std::size_t max_atoms,
                             StepBudget budget = {}, std::size_t cap = kDefaultCap);

}  // namespace spw

#endif  // SPW_AUTOMATON_HPP
