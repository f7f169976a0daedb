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

#include "pfac/text_io.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "pfac/dna.h"
#include "pfac/error.h"

namespace pfac {

namespace {

constexpr std::string_view kMatchHeader = "start\tlength\tpattern_id";

// Calls fn(line_number, line) for each line with any trailing CR removed.
template <class Fn>
void ForEachLine(std::string_view content, Fn fn) {
  std::size_t number = 0;
  while (!content.empty()) {
    const std::size_t eol = content.find('\n');
    std::string_view line = content.substr(0, eol);
    content.remove_prefix(eol == std::string_view::npos ? content.size()
                                                        : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++number, line);
  }
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

template <class T>
T ParseField(std::string_view field, std::size_t line) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed match record on line " + std::to_string(line));
  }
  return value;
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable,
                "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::kFileUnreadable,
                "error reading '" + path.string() + "'");
  }
  return std::move(buffer).str();
}

PatternSet ParsePatterns(std::string_view content) {
  std::vector<std::string> patterns;
  ForEachLine(content, [&](std::size_t number, std::string_view line) {
    if (IsBlank(line)) return;
    for (std::size_t col = 0; col < line.size(); ++col) {
      EncodeSymbolOrThrow(line[col], number, col + 1);
    }
    patterns.emplace_back(line);
  });
  if (patterns.empty()) {
    throw Error(ErrorCode::kEmptyFile, "pattern file contains no patterns");
  }
  return PatternSet(std::move(patterns));
}

PatternSet ReadPatterns(const std::filesystem::path& path) {
  return ParsePatterns(ReadFile(path));
}

std::string ParseFasta(std::string_view content) {
  std::string text;
  text.reserve(content.size());
  std::size_t header_line = 0;
  bool in_record = false;
  bool has_sequence = false;
  ForEachLine(content, [&](std::size_t number, std::string_view line) {
    if (!line.empty() && line.front() == '>') {
      if (in_record && !has_sequence) {
        throw Error(ErrorCode::kMalformedFasta,
                    "FASTA header on line " + std::to_string(header_line) +
                        " has no sequence");
      }
      if (in_record) text.push_back(kFastaRecordSeparator);
      in_record = true;
      has_sequence = false;
      header_line = number;
      return;
    }
    const std::size_t end = line.find_last_not_of(" \t");
    if (end == std::string_view::npos) return;
    if (!in_record) {
      throw Error(ErrorCode::kMalformedFasta,
                  "sequence data before the first FASTA header on line " +
                      std::to_string(number));
    }
    text.append(line.substr(0, end + 1));
    has_sequence = true;
  });
  if (in_record && !has_sequence) {
    throw Error(ErrorCode::kMalformedFasta,
                "FASTA header on line " + std::to_string(header_line) +
                    " has no sequence");
  }
  return text;
}

std::string ReadText(const TextSource& source) {
  std::string content = ReadFile(source.path);
  if (source.format == TextFormat::kPlain) return content;
  return ParseFasta(content);
}

void WriteMatches(std::span<const MatchRecord> records, std::ostream& out,
                  bool header) {
  if (header) out << kMatchHeader << '\n';
  std::string line;
  char buf[64];
  for (const MatchRecord& r : records) {
    line.clear();
    auto append = [&](auto value, char terminator) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
      line.append(buf, ptr);
      line.push_back(terminator);
    };
    append(r.start, '\t');
    append(r.length, '\t');
    append(r.pattern_id, '\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kWriteFailure, "failed to write matches");
}

void WriteMatchesFile(std::span<const MatchRecord> records,
                      const std::filesystem::path& path, bool header) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kWriteFailure,
                "cannot open '" + path.string() + "' for writing");
  }
  WriteMatches(records, out, header);
}

std::vector<MatchRecord> ParseMatches(std::string_view tsv) {
  std::vector<MatchRecord> records;
  ForEachLine(tsv, [&](std::size_t number, std::string_view line) {
    if (number == 1 && line == kMatchHeader) return;
    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed match record on line " + std::to_string(number));
    }
    records.push_back(
        {ParseField<std::uint64_t>(line.substr(0, tab1), number),
         ParseField<std::uint32_t>(line.substr(tab1 + 1, tab2 - tab1 - 1),
                                   number),
         ParseField<PatternId>(line.substr(tab2 + 1), number)});
  });
  return records;
}

void WritePatterns(const PatternSet& patterns, std::ostream& out) {
  for (const std::string& p : patterns.patterns()) out << p << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::kWriteFailure, "failed to write patterns");
}

void WriteFile(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kWriteFailure,
                "failed to write '" + path.string() + "'");
  }
}

}  // namespace pfac
