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

#ifndef SPW_TESTS_SUPPORT_HPP
#define SPW_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "spw/grammar.hpp"
#include "spw/language.hpp"
#include "spw/term.hpp"

namespace spw::test {

inline std::string data_path(std::string_view name) { return std::string(SPW_TEST_DATA) + "/" + std::string(name); }

inline std::string read_file(std::string_view name) {
  std::ifstream f(data_path(name));
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Grammar grammar_file(std::string_view name) { return parse_grammar(read_file(name)); }

inline Term T(std::string_view text) { return parse_term(text); }

/// generate() with the default membership step budget.
inline FiniteLang gen(const Grammar& g, std::size_t max_atoms, Mode mode = Mode::Ordered) {
  return generate(g, max_atoms, StepBudget{}.steps_for(max_atoms), mode);
}

}  // namespace spw::test

#endif  // SPW_TESTS_SUPPORT_HPP
