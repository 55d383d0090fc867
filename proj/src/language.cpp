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

#include "spw/language.hpp"

#include <algorithm>
#include <iterator>

#include "spw/error.hpp"

namespace spw {

FiniteLang::FiniteLang(Mode mode, std::vector<Term> terms) : mode_(mode) {
  for (Term& t : terms) t = canonicalize(t, mode);
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  terms_ = std::move(terms);
}

bool FiniteLang::contains(const Term& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), canonicalize(t, mode_));
}

namespace {

void require_same_mode(const FiniteLang& l1, const FiniteLang& l2) {
  if (l1.mode() != l2.mode()) {
    throw ModeMismatch("cannot combine " + std::string(to_string(l1.mode())) + " and " +
                       std::string(to_string(l2.mode())) + " languages");
  }
}

FiniteLang product(const FiniteLang& l1, const FiniteLang& l2, ProductKind kind) {
  require_same_mode(l1, l2);
  std::vector<Term> out;
  out.reserve(l1.size() * l2.size());
  for (const Term& x : l1) {
    for (const Term& y : l2) {
      out.push_back(kind == ProductKind::Seq ? Term::seq({x, y}) : Term::par({x, y}));
    }
  }
  return FiniteLang(l1.mode(), std::move(out));
}

}  // namespace

FiniteLang concat_lang(const FiniteLang& l1, const FiniteLang& l2) {
  return product(l1, l2, ProductKind::Seq);
}

FiniteLang par_lang(const FiniteLang& l1, const FiniteLang& l2) {
  return product(l1, l2, ProductKind::Par);
}

FiniteLang union_lang(const FiniteLang& l1, const FiniteLang& l2) {
  require_same_mode(l1, l2);
  std::vector<Term> out;
  out.reserve(l1.size() + l2.size());
  std::set_union(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(out));
  return FiniteLang(l1.mode(), std::move(out));
}

FiniteLang power(const FiniteLang& l, std::size_t n, ProductKind kind) {
  FiniteLang acc(l.mode(), {Term::eps()});
  for (std::size_t i = 0; i < n; ++i) acc = product(acc, l, kind);
  return acc;
}

FiniteLang kleene_bounded(const FiniteLang& l, Closure kind, std::size_t n_max) {
  if (kind == Closure::SpOtimes) {
    return union_lang(kleene_bounded(l, Closure::Star, n_max),
                      kleene_bounded(l, Closure::ParOplus, n_max));
  }
  ProductKind pk = kind == Closure::Star ? ProductKind::Seq : ProductKind::Par;
  FiniteLang layer(l.mode(), {Term::eps()});
  FiniteLang acc = layer;
  for (std::size_t n = 1; n <= n_max; ++n) {
    layer = product(layer, l, pk);
    acc = union_lang(acc, layer);
  }
  return acc;
}

FiniteLang reverse_lang(const FiniteLang& l) {
  std::vector<Term> out;
  out.reserve(l.size());
  for (const Term& t : l) out.push_back(reverse(t));
  return FiniteLang(l.mode(), std::move(out));
}

LangDiff lang_equal(const FiniteLang& l1, const FiniteLang& l2) {
  require_same_mode(l1, l2);
  LangDiff diff;
  std::vector<Term> left;
  std::vector<Term> right;
  std::set_difference(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(left));
  std::set_difference(l2.begin(), l2.end(), l1.begin(), l1.end(), std::back_inserter(right));
  diff.equal = left.empty() && right.empty();
  diff.only_left_count = left.size();
  diff.only_right_count = right.size();
  if (left.size() > LangDiff::kMaxWitnesses) left.resize(LangDiff::kMaxWitnesses);
  if (right.size() > LangDiff::kMaxWitnesses) right.resize(LangDiff::kMaxWitnesses);
  diff.only_left = std::move(left);
  diff.only_right = std::move(right);
  return diff;
}

std::string describe(const LangDiff& diff) {
  if (diff.equal) return "languages are equal\n";
  std::string out;
  auto section = [&out](const char* label, const std::vector<Term>& terms, std::size_t total) {
    if (total == 0) return;
    out += label;
    out += " (" + std::to_string(total) + "):\n";
    for (const Term& t : terms) out += "  " + t.text() + "\n";
    if (total > terms.size()) out += "  ... " + std::to_string(total - terms.size()) + " more\n";
  };
  section("only in left", diff.only_left, diff.only_left_count);
  section("only in right", diff.only_right, diff.only_right_count);
  return out;
}

Mode parse_mode(std::string_view name) {
  if (name == "ordered") return Mode::Ordered;
  if (name == "commutative") return Mode::Commutative;
  throw ParseError(0, "unknown mode '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

FiniteLang parse_language(std::string_view text, Mode default_mode) {
  Mode mode = default_mode;
  bool seen_term = false;
  bool seen_header = false;
  std::vector<Term> terms;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    std::size_t offset = line.empty() ? line_start : static_cast<std::size_t>(line.data() - text.data());
    if (!line.empty()) {
      if (line.starts_with("mode:")) {
        if (seen_term || seen_header) throw ParseError(offset, "mode header must come first");
        try {
          mode = parse_mode(trim(line.substr(5)));
        } catch (const ParseError&) {
          throw ParseError(offset, "unknown mode '" + std::string(trim(line.substr(5))) + "'");
        }
        seen_header = true;
      } else {
        try {
          terms.push_back(parse_term(line));
        } catch (const ParseError& e) {
          throw e.shifted(offset);
        }
        seen_term = true;
      }
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  return FiniteLang(mode, std::move(terms));
}

std::string format_language(const FiniteLang& l) {
  std::string out = "mode: " + std::string(to_string(l.mode())) + "\n";
  for (const Term& t : l) {
    out += t.text();
    out += '\n';
  }
  return out;
}

}  // namespace spw
