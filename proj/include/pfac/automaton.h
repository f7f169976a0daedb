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

#ifndef PFAC_AUTOMATON_H_
#define PFAC_AUTOMATON_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfac/dna.h"

namespace pfac {

using StateId = std::uint32_t;
// 1-based; 0 means "no pattern".
using PatternId = std::uint32_t;

inline constexpr StateId kRootState = 0;
inline constexpr StateId kNoTransition = 0;
inline constexpr PatternId kNoPattern = 0;

// Ordered, validated list of DNA patterns. Pattern k (1-based) is patterns()[k-1].
// Patterns are stored upper case.
class PatternSet {
 public:
  PatternSet() = default;

  // Throws EmptyPattern, NonDnaSymbolError (line = pattern id) or
  // DuplicatePatternError.
  explicit PatternSet(std::vector<std::string> patterns);

  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  const std::vector<std::string>& patterns() const noexcept { return patterns_; }
  std::string_view pattern(PatternId id) const { return patterns_.at(id - 1); }
  std::size_t total_length() const noexcept { return total_length_; }
  std::size_t max_length() const noexcept { return max_length_; }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<std::string> patterns_;
  std::size_t total_length_ = 0;
  std::size_t max_length_ = 0;
};

struct TransitionCell {
  StateId next_state = kNoTransition;
  PatternId matched_pattern_id = kNoPattern;

  friend bool operator==(const TransitionCell&, const TransitionCell&) = default;
};

// Dense states x 4 goto table of the pattern trie. Row r holds the outgoing
// edges of state r in column order A, T, C, G; a pattern id on a cell marks
// the edge that completes that pattern.
class TransitionTable {
 public:
  static constexpr std::size_t kPitch = kAlphabetSize;

  TransitionTable() : cells_(kPitch) {}

  // Wraps raw cells without checking trie invariants (see Validate).
  // cells.size() must be a positive multiple of kPitch.
  static TransitionTable FromCells(std::vector<TransitionCell> cells,
                                   std::vector<std::uint32_t> pattern_lengths);

  std::size_t num_states() const noexcept { return cells_.size() / kPitch; }
  std::size_t pattern_count() const noexcept { return pattern_lengths_.size(); }
  std::uint32_t pattern_length(PatternId id) const {
    return pattern_lengths_.at(id - 1);
  }
  std::span<const std::uint32_t> pattern_lengths() const noexcept {
    return pattern_lengths_;
  }
  std::uint32_t max_pattern_length() const noexcept { return max_length_; }

  const TransitionCell& cell(StateId state, DnaSymbol symbol) const {
    return cells_[state * kPitch + Code(symbol)];
  }
  std::span<const TransitionCell> cells() const noexcept { return cells_; }

  // Empty string if the table is a well-formed trie, otherwise a description
  // of the first violated invariant.
  std::string Validate() const;

  friend bool operator==(const TransitionTable&,
                         const TransitionTable&) = default;

 private:
  friend class TrieBuilder;

  std::vector<TransitionCell> cells_;
  std::vector<std::uint32_t> pattern_lengths_;
  std::uint32_t max_length_ = 0;
};

struct TrieOptions {
  // Hard cap on the number of states. The default is the exact fit,
  // 1 + total pattern length.
  std::optional<std::size_t> max_states;
};

// Inserts patterns in id order, allocating a fresh state for every new trie
// node in pattern-then-character order. Throws TooManyStates.
TransitionTable BuildTrie(const PatternSet& patterns,
                          const TrieOptions& options = {});

inline std::size_t StateCount(const TransitionTable& table) {
  return table.num_states();
}

// Goto table plus the failure function and output sets of the classic serial
// Aho-Corasick machine.
struct FailureAutomaton {
  TransitionTable table;
  std::vector<StateId> failure;
  std::vector<std::uint32_t> depth;
  // Sorted ascending.
  std::vector<std::vector<PatternId>> outputs;
};

// Throws InvalidArgument if `table` is not a valid trie.
FailureAutomaton BuildFailure(TransitionTable table);

// Path string spelled from the root to each state, indexed by state.
std::vector<std::string> StatePaths(const TransitionTable& table);

}  // namespace pfac

#endif  // PFAC_AUTOMATON_H_
