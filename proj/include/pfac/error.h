// Copyright 2026 The pfac-dna Authors
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

#ifndef PFAC_ERROR_H_
#define PFAC_ERROR_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfac {

// Every failure the library reports carries one of these codes. The CLI maps
// each code to a distinct process exit status (see ExitStatus).
enum class ErrorCode {
  kInvalidArgument,
  kNonDnaSymbol,
  kEmptyPattern,
  kDuplicatePattern,
  kTooManyStates,
  kPackedOverflow,
  kFileUnreadable,
  kEmptyFile,
  kMalformedFasta,
  kWriteFailure,
  kDuplicateSaturation,
  kMatchCountMismatch,
  kMissingBaseline,
};

std::string_view ErrorCodeName(ErrorCode code);

// Process exit status used by the CLI for `code`. 0 and 1 are never returned;
// 2 is reserved for command-line usage errors.
int ExitStatus(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A character outside {A,C,G,T} (either case) where DNA was required.
// line/column are 1-based; line is 0 when the source has no line structure.
class NonDnaSymbolError : public Error {
 public:
  NonDnaSymbolError(char ch, std::size_t line, std::size_t column);

  char symbol() const noexcept { return ch_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  char ch_;
  std::size_t line_;
  std::size_t column_;
};

class DuplicatePatternError : public Error {
 public:
  DuplicatePatternError(std::uint32_t first_id, std::uint32_t second_id);

  std::uint32_t first_id() const noexcept { return first_; }
  std::uint32_t second_id() const noexcept { return second_; }

 private:
  std::uint32_t first_;
  std::uint32_t second_;
};

}  // namespace pfac

#endif  // PFAC_ERROR_H_
