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

#include "pfac/automaton.h"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_map>
#include <utility>

#include "pfac/error.h"

namespace pfac {

PatternSet::PatternSet(std::vector<std::string> patterns)
    : patterns_(std::move(patterns)) {
  std::unordered_map<std::string_view, PatternId> seen;
  seen.reserve(patterns_.size());
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    const auto id = static_cast<PatternId>(i + 1);
    std::string& pattern = patterns_[i];
    if (pattern.empty()) {
      throw Error(ErrorCode::kEmptyPattern,
                  "pattern " + std::to_string(id) + " is empty");
    }
    for (std::size_t col = 0; col < pattern.size(); ++col) {
      pattern[col] = Letter(EncodeSymbolOrThrow(pattern[col], id, col + 1));
    }
    auto [it, inserted] = seen.emplace(pattern, id);
    if (!inserted) throw DuplicatePatternError(it->second, id);
    total_length_ += pattern.size();
    max_length_ = std::max(max_length_, pattern.size());
  }
}

TransitionTable TransitionTable::FromCells(
    std::vector<TransitionCell> cells,
    std::vector<std::uint32_t> pattern_lengths) {
  if (cells.empty() || cells.size() % kPitch != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "transition table size must be a positive multiple of 4");
  }
  TransitionTable table;
  table.cells_ = std::move(cells);
  table.pattern_lengths_ = std::move(pattern_lengths);
  for (auto len : table.pattern_lengths_) {
    table.max_length_ = std::max(table.max_length_, len);
  }
  return table;
}

std::string TransitionTable::Validate() const {
  const std::size_t states = num_states();
  std::vector<std::uint32_t> incoming(states, 0);
  std::vector<std::uint32_t> id_uses(pattern_lengths_.size() + 1, 0);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const TransitionCell& c = cells_[i];
    const std::string where = "cell (" + std::to_string(i / kPitch) + ", " +
                              kSymbolLetters[i % kPitch] + ")";
    if (c.next_state == kNoTransition) {
      if (c.matched_pattern_id != kNoPattern) {
        return where + " carries a pattern id but no transition";
      }
      continue;
    }
    if (c.next_state >= states) return where + " points past the last state";
    if (c.matched_pattern_id > pattern_lengths_.size()) {
      return where + " carries an unknown pattern id";
    }
    ++incoming[c.next_state];
    ++id_uses[c.matched_pattern_id];
  }
  for (std::size_t s = 1; s < states; ++s) {
    if (incoming[s] != 1) {
      return "state " + std::to_string(s) + " has " +
             std::to_string(incoming[s]) + " incoming edges";
    }
  }
  for (std::size_t id = 1; id < id_uses.size(); ++id) {
    if (id_uses[id] != 1) {
      return "pattern " + std::to_string(id) + " appears on " +
             std::to_string(id_uses[id]) + " edges";
    }
  }
  // Every state reachable from the root, and pattern ids sit at the depth
  // matching their length.
  std::vector<std::uint32_t> depth(states, 0);
  std::vector<bool> reached(states, false);
  std::queue<StateId> frontier;
  frontier.push(kRootState);
  reached[kRootState] = true;
  std::size_t visited = 0;
  while (!frontier.empty()) {
    const StateId s = frontier.front();
    frontier.pop();
    ++visited;
    for (std::size_t sym = 0; sym < kPitch; ++sym) {
      const TransitionCell& c = cells_[s * kPitch + sym];
      if (c.next_state == kNoTransition || reached[c.next_state]) continue;
      reached[c.next_state] = true;
      depth[c.next_state] = depth[s] + 1;
      if (c.matched_pattern_id != kNoPattern &&
          pattern_lengths_[c.matched_pattern_id - 1] != depth[c.next_state]) {
        return "pattern " + std::to_string(c.matched_pattern_id) +
               " completes at the wrong depth";
      }
      frontier.push(c.next_state);
    }
  }
  if (visited != states) return "some states are unreachable from the root";
  return {};
}

class TrieBuilder {
 public:
  static TransitionTable Build(const PatternSet& patterns,
                               const TrieOptions& options) {
    const std::size_t exact_fit = 1 + patterns.total_length();
    const std::size_t cap = options.max_states.value_or(exact_fit);
    if (cap > std::size_t{1} << 32) {
      throw Error(ErrorCode::kTooManyStates,
                  "state cap exceeds 32-bit state indices");
    }

    TransitionTable table;
    table.cells_.reserve(std::min(cap, exact_fit) * TransitionTable::kPitch);
    table.pattern_lengths_.reserve(patterns.size());

    std::size_t next_fresh = 1;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      const auto id = static_cast<PatternId>(i + 1);
      const std::string& pattern = patterns.patterns()[i];
      StateId state = kRootState;
      TransitionCell* edge = nullptr;
      for (char ch : pattern) {
        const std::size_t index =
            state * TransitionTable::kPitch + Code(*EncodeSymbol(ch));
        if (table.cells_[index].next_state == kNoTransition) {
          if (next_fresh >= cap) {
            throw Error(ErrorCode::kTooManyStates,
                        "pattern " + std::to_string(id) +
                            " needs more than the maximum of " +
                            std::to_string(cap) + " states");
          }
          table.cells_[index].next_state = static_cast<StateId>(next_fresh++);
          table.cells_.resize(table.cells_.size() + TransitionTable::kPitch);
        }
        edge = &table.cells_[index];
        state = edge->next_state;
      }
      // PatternSet rejects duplicates, so the final edge is still unclaimed.
      assert(edge->matched_pattern_id == kNoPattern);
      edge->matched_pattern_id = id;
      table.pattern_lengths_.push_back(
          static_cast<std::uint32_t>(pattern.size()));
      table.max_length_ = std::max(table.max_length_,
                                   static_cast<std::uint32_t>(pattern.size()));
    }
    return table;
  }
};

TransitionTable BuildTrie(const PatternSet& patterns,
                          const TrieOptions& options) {
  return TrieBuilder::Build(patterns, options);
}

FailureAutomaton BuildFailure(TransitionTable table) {
  if (std::string problem = table.Validate(); !problem.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a valid trie: " + problem);
  }
  const std::size_t states = table.num_states();
  FailureAutomaton automaton;
  automaton.failure.assign(states, kRootState);
  automaton.depth.assign(states, 0);
  automaton.outputs.assign(states, {});

  std::vector<StateId> order;
  order.reserve(states);
  order.push_back(kRootState);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const StateId s = order[head];
    for (std::size_t sym = 0; sym < TransitionTable::kPitch; ++sym) {
      const auto symbol = static_cast<DnaSymbol>(sym);
      const TransitionCell& edge = table.cell(s, symbol);
      if (edge.next_state == kNoTransition) continue;
      const StateId child = edge.next_state;
      automaton.depth[child] = automaton.depth[s] + 1;
      if (s != kRootState) {
        StateId f = automaton.failure[s];
        while (f != kRootState &&
               table.cell(f, symbol).next_state == kNoTransition) {
          f = automaton.failure[f];
        }
        automaton.failure[child] = table.cell(f, symbol).next_state;
      }
      if (edge.matched_pattern_id != kNoPattern) {
        automaton.outputs[child].push_back(edge.matched_pattern_id);
      }
      order.push_back(child);
    }
  }
  // BFS order guarantees failure targets are finalized before their users.
  for (StateId s : order) {
    const auto& inherited = automaton.outputs[automaton.failure[s]];
    if (s == kRootState || inherited.empty()) continue;
    auto& own = automaton.outputs[s];
    own.insert(own.end(), inherited.begin(), inherited.end());
    std::sort(own.begin(), own.end());
  }
  automaton.table = std::move(table);
  return automaton;
}

std::vector<std::string> StatePaths(const TransitionTable& table) {
  std::vector<std::string> paths(table.num_states());
  std::vector<StateId> order{kRootState};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const StateId s = order[head];
    for (std::size_t sym = 0; sym < TransitionTable::kPitch; ++sym) {
      const StateId child =
          table.cell(s, static_cast<DnaSymbol>(sym)).next_state;
      if (child == kNoTransition) continue;
      paths[child] = paths[s] + kSymbolLetters[sym];
      order.push_back(child);
    }
  }
  return paths;
}

}  // namespace pfac
