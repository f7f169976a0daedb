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

#ifndef PFAC_LAYOUTS_H_
#define PFAC_LAYOUTS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfac/automaton.h"
#include "pfac/matcher.h"

namespace pfac {

// Physical encodings of the goto table. All of them index cells as
// state * 4 + symbol code.
enum class TableLayout {
  // Two parallel arrays: next states and matched pattern ids.
  kSplitArrays,
  // One array of (next_state, matched_pattern_id) pairs.
  kInterleavedPairs,
  // One array of words packing both fields; half the bytes of a pair when the
  // 32-bit packing fits.
  kPackedWord,
};

enum class InputStaging {
  // Scanners read the shared text in place.
  kDirect,
  // Each worker copies chunk + overhang into a private buffer before scanning.
  kChunkLocal,
};

struct LayoutVariant {
  TableLayout table_layout = TableLayout::kInterleavedPairs;
  InputStaging input_staging = InputStaging::kChunkLocal;

  friend bool operator==(const LayoutVariant&, const LayoutVariant&) = default;
};

// "split" | "merged" | "packed", optionally followed by "+direct" or
// "+staged" (default direct).
LayoutVariant ParseLayoutVariant(std::string_view text);
std::string ToString(LayoutVariant variant);
std::vector<LayoutVariant> AllLayoutVariants();
// Comma-separated list of every canonical variant string.
std::string ValidLayoutVariants();

enum class PackedWidth {
  // 32-bit words when states and ids fit, otherwise 64-bit.
  kAuto,
  k32,
  k64,
};

// 32-bit packing: next_state in the low 20 bits, pattern id in the high 12.
inline constexpr unsigned kPacked32StateBits = 20;
inline constexpr unsigned kPacked32PatternBits = 12;
inline constexpr std::uint32_t kPacked32MaxState =
    (std::uint32_t{1} << kPacked32StateBits) - 1;
inline constexpr std::uint32_t kPacked32MaxPattern =
    (std::uint32_t{1} << kPacked32PatternBits) - 1;

constexpr std::uint32_t PackCell32(TransitionCell cell) {
  return (cell.matched_pattern_id << kPacked32StateBits) | cell.next_state;
}
constexpr TransitionCell UnpackCell32(std::uint32_t word) {
  return {word & kPacked32MaxState, word >> kPacked32StateBits};
}
constexpr std::uint64_t PackCell64(TransitionCell cell) {
  return (std::uint64_t{cell.matched_pattern_id} << 32) | cell.next_state;
}
constexpr TransitionCell UnpackCell64(std::uint64_t word) {
  return {static_cast<StateId>(word), static_cast<PatternId>(word >> 32)};
}

// Immutable encoded table; safe to share across scanning threads.
class EncodedTable {
 public:
  static constexpr std::size_t kPitch = TransitionTable::kPitch;

  LayoutVariant variant() const noexcept { return variant_; }
  std::size_t num_states() const noexcept { return num_states_; }
  std::uint32_t max_pattern_length() const noexcept;
  std::span<const std::uint32_t> pattern_lengths() const noexcept {
    return pattern_lengths_;
  }
  // 32 or 64 for kPackedWord, 0 otherwise.
  unsigned packed_bits() const noexcept { return packed_bits_; }
  std::size_t bytes_per_cell() const noexcept;

  std::span<const TransitionCell> pairs() const noexcept { return pairs_; }
  std::span<const StateId> next_states() const noexcept { return next_; }
  std::span<const PatternId> pattern_ids() const noexcept { return ids_; }
  std::span<const std::uint32_t> packed32() const noexcept { return packed32_; }
  std::span<const std::uint64_t> packed64() const noexcept { return packed64_; }

 private:
  friend EncodedTable EncodeTable(const TransitionTable&, LayoutVariant,
                                  PackedWidth);

  LayoutVariant variant_;
  std::size_t num_states_ = 0;
  unsigned packed_bits_ = 0;
  std::vector<std::uint32_t> pattern_lengths_;
  std::vector<TransitionCell> pairs_;
  std::vector<StateId> next_;
  std::vector<PatternId> ids_;
  std::vector<std::uint32_t> packed32_;
  std::vector<std::uint64_t> packed64_;
};

// Throws PackedOverflow when PackedWidth::k32 is forced and a state index or
// pattern id does not fit its field.
EncodedTable EncodeTable(const TransitionTable& table, LayoutVariant variant,
                         PackedWidth width = PackedWidth::kAuto);

TransitionCell Lookup(const EncodedTable& encoded, StateId state,
                      DnaSymbol symbol);

TransitionTable DecodeTable(const EncodedTable& encoded);

inline constexpr std::size_t kDefaultChunkBytes = 64 * 1024;

// Same contract as ScanPfac for every variant. chunk_bytes only affects
// InputStaging::kChunkLocal.
std::vector<MatchRecord> ScanPfacWithLayout(
    const EncodedTable& encoded, std::string_view text,
    const ScanPolicy& policy, std::size_t workers = 1,
    std::size_t chunk_bytes = kDefaultChunkBytes);

}  // namespace pfac

#endif  // PFAC_LAYOUTS_H_
