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

#include "pfac/error.h"

namespace pfac {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonDnaSymbol: return "NonDnaSymbol";
    case ErrorCode::kEmptyPattern: return "EmptyPattern";
    case ErrorCode::kDuplicatePattern: return "DuplicatePattern";
    case ErrorCode::kTooManyStates: return "TooManyStates";
    case ErrorCode::kPackedOverflow: return "PackedOverflow";
    case ErrorCode::kFileUnreadable: return "FileUnreadable";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kMalformedFasta: return "MalformedFasta";
    case ErrorCode::kWriteFailure: return "WriteFailure";
    case ErrorCode::kDuplicateSaturation: return "DuplicateSaturation";
    case ErrorCode::kMatchCountMismatch: return "MatchCountMismatch";
    case ErrorCode::kMissingBaseline: return "MissingBaseline";
  }
  return "Unknown";
}

int ExitStatus(ErrorCode code) {
  return 3 + static_cast<int>(code);
}

namespace {

std::string DescribeSymbol(char ch) {
  const auto byte = static_cast<unsigned char>(ch);
  if (byte >= 0x20 && byte < 0x7f) return std::string("'") + ch + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[byte >> 4] + kHex[byte & 0xf];
}

}  // namespace

NonDnaSymbolError::NonDnaSymbolError(char ch, std::size_t line,
                                     std::size_t column)
    : Error(ErrorCode::kNonDnaSymbol,
            "non-DNA symbol " + DescribeSymbol(ch) +
                (line != 0 ? " at line " + std::to_string(line) : "") +
                " column " + std::to_string(column)),
      ch_(ch),
      line_(line),
      column_(column) {}

DuplicatePatternError::DuplicatePatternError(std::uint32_t first_id,
                                             std::uint32_t second_id)
    : Error(ErrorCode::kDuplicatePattern,
            "pattern " + std::to_string(second_id) + " duplicates pattern " +
                std::to_string(first_id)),
      first_(first_id),
      second_(second_id) {}

}  // namespace pfac
