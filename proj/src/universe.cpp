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

#include "spw/universe.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "spw/error.hpp"

namespace spw {

std::string normalize_alphabet(std::string_view letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    char c = letters[i];
    if (c == ',' || c == ' ') continue;
    if (c < 'a' || c > 'z') throw ParseError(i, "alphabet letters must be a-z");
    out += c;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Terms grouped by exact atom count and top-level kind. A Seq with k atoms is
// a non-Seq head followed by a tail that is either non-Seq or itself a Seq;
// Par is symmetric.
class UniverseBuilder {
 public:
  UniverseBuilder(std::string_view alphabet, Mode mode, std::size_t cap)
      : alphabet_(alphabet), mode_(mode), cap_(cap) {}

  std::vector<Term> build(std::size_t max_atoms) {
    seq_.assign(max_atoms + 1, {});
    par_.assign(max_atoms + 1, {});
    std::vector<Term> all{Term::eps()};
    for (std::size_t k = 1; k <= max_atoms; ++k) {
      seq_[k] = compose(k, Kind::Seq);
      par_[k] = compose(k, Kind::Par);
      if (k == 1) {
        for (char c : alphabet_) all.push_back(Term::leaf(c));
      }
      all.insert(all.end(), seq_[k].begin(), seq_[k].end());
      all.insert(all.end(), par_[k].begin(), par_[k].end());
      if (all.size() > cap_) {
        throw ResourceLimit("term universe exceeds cap of " + std::to_string(cap_) + " terms");
      }
    }
    return all;
  }

 private:
  // Terms with exactly k atoms whose top-level kind differs from `kind`.
  std::vector<Term> other_than(std::size_t k, Kind kind) const {
    std::vector<Term> out;
    if (k == 1) {
      for (char c : alphabet_) out.push_back(Term::leaf(c));
      return out;
    }
    const auto& src = kind == Kind::Seq ? par_[k] : seq_[k];
    out.assign(src.begin(), src.end());
    return out;
  }

  std::vector<Term> compose(std::size_t k, Kind kind) const {
    std::set<Term> out;
    for (std::size_t head_atoms = 1; head_atoms < k; ++head_atoms) {
      std::size_t rest = k - head_atoms;
      std::vector<Term> tails = other_than(rest, kind);
      const auto& same = kind == Kind::Seq ? seq_[rest] : par_[rest];
      tails.insert(tails.end(), same.begin(), same.end());
      for (const Term& head : other_than(head_atoms, kind)) {
        for (const Term& tail : tails) {
          Term t = kind == Kind::Seq ? Term::seq({head, tail}) : Term::par({head, tail});
          out.insert(canonicalize(t, mode_));
          if (out.size() > cap_) {
            throw ResourceLimit("term universe exceeds cap of " + std::to_string(cap_) + " terms");
          }
        }
      }
    }
    return {out.begin(), out.end()};
  }

  std::string alphabet_;
  Mode mode_;
  std::size_t cap_;
  std::vector<std::vector<Term>> seq_;
  std::vector<std::vector<Term>> par_;
};

}  // namespace

FiniteLang enumerate_terms(std::string_view alphabet, std::size_t max_atoms, Mode mode, std::size_t cap) {
  std::string letters = normalize_alphabet(alphabet);
  if (letters.empty()) throw ParseError(0, "alphabet must not be empty");
  return FiniteLang(mode, UniverseBuilder(letters, mode, cap).build(max_atoms));
}

}  // namespace spw
