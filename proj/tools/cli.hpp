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

#ifndef SPW_TOOLS_CLI_HPP
#define SPW_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spw::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kParse = 2;
inline constexpr int kModeMismatch = 3;
inline constexpr int kFragment = 4;
inline constexpr int kClassification = 5;
inline constexpr int kResourceLimit = 6;

/// Runs one command. `args` excludes the program name. A file argument of
/// `-` reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spw::cli

#endif  // SPW_TOOLS_CLI_HPP
