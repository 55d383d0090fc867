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

#ifndef SPW_UNIVERSE_HPP
#define SPW_UNIVERSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "spw/language.hpp"

namespace spw {

/// Every canonical term over `alphabet` with at most `max_atoms` atoms,
/// eps included. Throws ResourceLimit when the result would exceed `cap`.
FiniteLang enumerate_terms(std::string_view alphabet, std::size_t max_atoms, Mode mode = Mode::Ordered,
                           std::size_t cap = kDefaultCap);

/// Sorted, deduplicated lowercase letters of `letters`; throws ParseError on
/// anything else.
std::string normalize_alphabet(std::string_view letters);

}  // namespace spw

#endif  // SPW_UNIVERSE_HPP
