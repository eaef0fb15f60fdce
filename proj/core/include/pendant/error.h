// Copyright 2026 The Pendant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pendant {

/// Broad failure class, used by the command-line tool to pick an exit code.
enum class ErrorCategory {
  kInput,  // malformed data, bad configuration, failed validation
  kIo,     // file-system failures
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ErrorCategory category() const noexcept {
    return ErrorCategory::kInput;
  }
};

/// Precondition or invariant violated by a caller-supplied value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed image or STL data. `offset()` is the byte position where decoding
/// stopped, when known.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit DecodeError(const std::string& what)
      : Error(what), offset_(std::string::npos) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

/// Region-expression or STL-text parse failure with a character position.
class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kArity, kInvariant, kUnknownName };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error("at position " + std::to_string(position) + ": " + what),
        kind_(kind),
        position_(position) {}
  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Meshing produced no geometry (nothing inside the clip, all heights at base).
class EmptySolidError : public Error {
 public:
  using Error::Error;
};

/// A mesh failed a watertightness/orientation check.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
  ErrorCategory category() const noexcept override { return ErrorCategory::kIo; }
};

}  // namespace pendant
