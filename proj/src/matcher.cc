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

#include "pfac/matcher.h"

#include <algorithm>

#include "scan_kernel.h"

namespace pfac {

std::vector<MatchRecord> ScanSerialAc(const FailureAutomaton& automaton,
                                      std::string_view text) {
  const TransitionTable& table = automaton.table;
  std::vector<MatchRecord> records;
  StateId state = kRootState;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const auto symbol = EncodeSymbol(text[pos]);
    if (!symbol) {
      state = kRootState;
      continue;
    }
    while (state != kRootState &&
           table.cell(state, *symbol).next_state == kNoTransition) {
      state = automaton.failure[state];
    }
    state = table.cell(state, *symbol).next_state;
    for (PatternId id : automaton.outputs[state]) {
      const std::uint32_t length = table.pattern_length(id);
      records.push_back({pos + 1 - length, length, id});
    }
  }
  std::sort(records.begin(), records.end(), MatchOrder);
  return records;
}

std::vector<MatchRecord> ScanPfac(const TransitionTable& table,
                                  std::string_view text,
                                  const ScanPolicy& policy,
                                  std::size_t workers) {
  const internal::CellView view{table.cells().data()};
  return internal::RunPartitioned(
      text.size(), workers,
      [&](std::size_t first, std::size_t last, std::vector<MatchRecord>& out) {
        internal::NoProbe probe;
        internal::ScanStarts(view, text, first, last, 0, policy.match_mode,
                             out, probe);
      });
}

namespace {

bool EqualsIgnoringCase(std::string_view text, std::string_view upper) {
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const std::uint8_t code = kSymbolTable[static_cast<unsigned char>(text[i])];
    if (code == kNoSymbol || kSymbolLetters[code] != upper[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<MatchRecord> ScanNaive(const PatternSet& patterns,
                                   std::string_view text) {
  std::vector<MatchRecord> records;
  for (std::size_t start = 0; start < text.size(); ++start) {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const std::string& pattern = patterns.patterns()[i];
      if (pattern.size() > text.size() - start) continue;
      if (EqualsIgnoringCase(text.substr(start, pattern.size()), pattern)) {
        records.push_back({start, static_cast<std::uint32_t>(pattern.size()),
                           static_cast<PatternId>(i + 1)});
      }
    }
  }
  return records;
}

std::vector<MatchRecord> LongestOnlyFilter(std::vector<MatchRecord> records) {
  auto out = records.begin();
  for (auto it = records.begin(); it != records.end();) {
    auto best = it;
    auto next = it + 1;
    for (; next != records.end() && next->start == it->start; ++next) {
      if (next->length > best->length) best = next;
    }
    *out++ = *best;
    it = next;
  }
  records.erase(out, records.end());
  return records;
}

}  // namespace pfac
