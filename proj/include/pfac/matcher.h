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

#ifndef PFAC_MATCHER_H_
#define PFAC_MATCHER_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pfac/automaton.h"

namespace pfac {

// One occurrence: text[start, start + length) spells pattern pattern_id.
struct MatchRecord {
  std::uint64_t start = 0;
  std::uint32_t length = 0;
  PatternId pattern_id = kNoPattern;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

// Canonical output order.
inline bool MatchOrder(const MatchRecord& a, const MatchRecord& b) {
  return a.start != b.start ? a.start < b.start : a.pattern_id < b.pattern_id;
}

enum class MatchMode {
  // At most one record per start offset: the longest pattern beginning there.
  kLongestOnly,
  // Every pattern occurrence.
  kAllMatches,
};

// Non-DNA bytes never have a transition, so no match spans them. This is the
// only supported policy.
enum class NonDnaPolicy { kBarrier };

struct ScanPolicy {
  MatchMode match_mode = MatchMode::kLongestOnly;
  NonDnaPolicy non_dna = NonDnaPolicy::kBarrier;
};

// Single-cursor Aho-Corasick scan using failure links. Always reports every
// occurrence; the policy's match_mode is ignored. A non-DNA byte resets the
// cursor to the root.
std::vector<MatchRecord> ScanSerialAc(const FailureAutomaton& automaton,
                                      std::string_view text);

// Failure-less parallel scan: one logical scanner per start offset walks the
// goto table until it dead-ends. Start offsets are split into `workers`
// contiguous ranges, each scanned on its own thread. The result is sorted by
// (start, pattern_id) and independent of `workers` (which must be >= 1).
std::vector<MatchRecord> ScanPfac(const TransitionTable& table,
                                  std::string_view text,
                                  const ScanPolicy& policy,
                                  std::size_t workers = 1);

// Reference scanner: compares every pattern at every offset.
std::vector<MatchRecord> ScanNaive(const PatternSet& patterns,
                                   std::string_view text);

// Keeps only the longest record of each start offset. Input must be sorted by
// MatchOrder.
std::vector<MatchRecord> LongestOnlyFilter(std::vector<MatchRecord> records);

}  // namespace pfac

#endif  // PFAC_MATCHER_H_
