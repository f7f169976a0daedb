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

#ifndef PFAC_TEXT_IO_H_
#define PFAC_TEXT_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfac/automaton.h"
#include "pfac/matcher.h"

namespace pfac {

enum class TextFormat { kPlain, kFasta };

struct TextSource {
  TextFormat format = TextFormat::kPlain;
  std::filesystem::path path;
};

// Placed between FASTA records. It is not a DNA symbol, so the barrier policy
// keeps matches from crossing records.
inline constexpr char kFastaRecordSeparator = '\0';

// Whole file as bytes. Throws FileUnreadable.
std::string ReadFile(const std::filesystem::path& path);

// Pattern file: one pattern per line, LF or CRLF, blank lines skipped. Ids
// follow the order of non-blank lines. Throws NonDnaSymbolError (physical
// line and column), DuplicatePatternError, EmptyFile.
PatternSet ParsePatterns(std::string_view content);
PatternSet ReadPatterns(const std::filesystem::path& path);

// Concatenates the sequence lines of each record, records joined by
// kFastaRecordSeparator. Throws MalformedFasta.
std::string ParseFasta(std::string_view content);
std::string ReadText(const TextSource& source);

// "start\tlength\tpattern_id\n" per record.
void WriteMatches(std::span<const MatchRecord> records, std::ostream& out,
                  bool header = false);
void WriteMatchesFile(std::span<const MatchRecord> records,
                      const std::filesystem::path& path, bool header = false);
// Inverse of WriteMatches; accepts the optional header line.
std::vector<MatchRecord> ParseMatches(std::string_view tsv);

void WritePatterns(const PatternSet& patterns, std::ostream& out);
void WriteFile(const std::filesystem::path& path, std::string_view bytes);

}  // namespace pfac

#endif  // PFAC_TEXT_IO_H_
