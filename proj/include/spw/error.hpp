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

#ifndef SPW_ERROR_HPP
#define SPW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `offset()` is the byte offset into the text that
/// was handed to the parser (for line-oriented files, into the whole file).
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("at offset " + std::to_string(offset) + ": " + what), offset_(offset), message_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset prefix.
  const std::string& message() const noexcept { return message_; }

  /// Same error relocated by `base` bytes, for parsers that hand slices of a
  /// larger text to a sub-parser.
  ParseError shifted(std::size_t base) const { return ParseError(base + offset_, message_); }

 private:
  std::size_t offset_;
  std::string message_;
};

/// Structurally invalid grammar or automaton (undeclared symbol, bad
/// multiset cardinality, dangling reference).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two languages with different semantics modes were combined.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// A regular expression outside the parallel fragment was converted.
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// A grammar handed to the automaton construction is not parallel-linear.
class NotParallelLinear : public Error {
 public:
  using Error::Error;
};

/// A bounded enumeration grew past its configured cardinality cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace spw

#endif  // SPW_ERROR_HPP
