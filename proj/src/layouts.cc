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

#include "pfac/layouts.h"

#include <algorithm>
#include <array>
#include <cassert>
#include <utility>

#include "pfac/error.h"
#include "scan_kernel.h"

namespace pfac {

namespace {

struct NamedLayout {
  std::string_view name;
  TableLayout layout;
};
constexpr std::array<NamedLayout, 3> kLayoutNames = {{
    {"split", TableLayout::kSplitArrays},
    {"merged", TableLayout::kInterleavedPairs},
    {"packed", TableLayout::kPackedWord},
}};

struct NamedStaging {
  std::string_view name;
  InputStaging staging;
};
constexpr std::array<NamedStaging, 2> kStagingNames = {{
    {"direct", InputStaging::kDirect},
    {"staged", InputStaging::kChunkLocal},
}};

struct SplitView {
  const StateId* next;
  const PatternId* ids;
  TransitionCell Load(std::size_t index) const {
    return {next[index], ids[index]};
  }
};

struct Packed32View {
  const std::uint32_t* words;
  TransitionCell Load(std::size_t index) const {
    return UnpackCell32(words[index]);
  }
};

struct Packed64View {
  const std::uint64_t* words;
  TransitionCell Load(std::size_t index) const {
    return UnpackCell64(words[index]);
  }
};

template <class View>
std::vector<MatchRecord> ScanWith(const View& view,
                                  const EncodedTable& encoded,
                                  std::string_view text,
                                  const ScanPolicy& policy,
                                  std::size_t workers,
                                  std::size_t chunk_bytes) {
  const MatchMode mode = policy.match_mode;
  if (encoded.variant().input_staging == InputStaging::kDirect) {
    return internal::RunPartitioned(
        text.size(), workers,
        [&](std::size_t first, std::size_t last,
            std::vector<MatchRecord>& out) {
          internal::NoProbe probe;
          internal::ScanStarts(view, text, first, last, 0, mode, out, probe);
        });
  }
  const std::uint32_t max_length = encoded.max_pattern_length();
  return internal::RunPartitioned(
      text.size(), workers,
      [&](std::size_t first, std::size_t last, std::vector<MatchRecord>& out) {
        internal::NoProbe probe;
        internal::ScanStartsStaged(view, text, first, last, chunk_bytes,
                                   max_length, mode, out, probe);
      });
}

}  // namespace

LayoutVariant ParseLayoutVariant(std::string_view text) {
  const std::size_t plus = text.find('+');
  const std::string_view layout_name = text.substr(0, plus);
  const std::string_view staging_name =
      plus == std::string_view::npos ? "direct" : text.substr(plus + 1);
  const auto layout =
      std::find_if(kLayoutNames.begin(), kLayoutNames.end(),
                   [&](const NamedLayout& n) { return n.name == layout_name; });
  const auto staging = std::find_if(
      kStagingNames.begin(), kStagingNames.end(),
      [&](const NamedStaging& n) { return n.name == staging_name; });
  if (layout == kLayoutNames.end() || staging == kStagingNames.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid layout variant '" + std::string(text) +
                    "'; valid variants: " + ValidLayoutVariants());
  }
  return {layout->layout, staging->staging};
}

std::string ToString(LayoutVariant variant) {
  std::string out;
  for (const auto& n : kLayoutNames) {
    if (n.layout == variant.table_layout) out = n.name;
  }
  for (const auto& n : kStagingNames) {
    if (n.staging == variant.input_staging) (out += '+') += n.name;
  }
  return out;
}

std::vector<LayoutVariant> AllLayoutVariants() {
  std::vector<LayoutVariant> all;
  for (const auto& layout : kLayoutNames) {
    for (const auto& staging : kStagingNames) {
      all.push_back({layout.layout, staging.staging});
    }
  }
  return all;
}

std::string ValidLayoutVariants() {
  std::string out;
  for (LayoutVariant v : AllLayoutVariants()) {
    if (!out.empty()) out += ", ";
    out += ToString(v);
  }
  return out;
}

std::uint32_t EncodedTable::max_pattern_length() const noexcept {
  std::uint32_t longest = 0;
  for (auto len : pattern_lengths_) longest = std::max(longest, len);
  return longest;
}

std::size_t EncodedTable::bytes_per_cell() const noexcept {
  switch (variant_.table_layout) {
    case TableLayout::kSplitArrays:
      return sizeof(StateId) + sizeof(PatternId);
    case TableLayout::kInterleavedPairs:
      return sizeof(TransitionCell);
    case TableLayout::kPackedWord:
      return packed_bits_ / 8;
  }
  return 0;
}

EncodedTable EncodeTable(const TransitionTable& table, LayoutVariant variant,
                         PackedWidth width) {
  EncodedTable encoded;
  encoded.variant_ = variant;
  encoded.num_states_ = table.num_states();
  encoded.pattern_lengths_.assign(table.pattern_lengths().begin(),
                                  table.pattern_lengths().end());
  const std::span<const TransitionCell> cells = table.cells();

  switch (variant.table_layout) {
    case TableLayout::kSplitArrays:
      encoded.next_.reserve(cells.size());
      encoded.ids_.reserve(cells.size());
      for (const TransitionCell& c : cells) {
        encoded.next_.push_back(c.next_state);
        encoded.ids_.push_back(c.matched_pattern_id);
      }
      break;
    case TableLayout::kInterleavedPairs:
      encoded.pairs_.assign(cells.begin(), cells.end());
      break;
    case TableLayout::kPackedWord: {
      // The largest state index is num_states - 1, the largest id the count.
      const bool fits32 = table.num_states() - 1 <= kPacked32MaxState &&
                          table.pattern_count() <= kPacked32MaxPattern;
      if (width == PackedWidth::k32 && !fits32) {
        throw Error(ErrorCode::kPackedOverflow,
                    std::to_string(table.num_states()) + " states / " +
                        std::to_string(table.pattern_count()) +
                        " patterns do not fit the 20/12-bit packed word");
      }
      const bool use32 =
          width == PackedWidth::k32 || (width == PackedWidth::kAuto && fits32);
      if (use32) {
        encoded.packed_bits_ = 32;
        encoded.packed32_.reserve(cells.size());
        for (const TransitionCell& c : cells) {
          encoded.packed32_.push_back(PackCell32(c));
        }
      } else {
        encoded.packed_bits_ = 64;
        encoded.packed64_.reserve(cells.size());
        for (const TransitionCell& c : cells) {
          encoded.packed64_.push_back(PackCell64(c));
        }
      }
      break;
    }
  }
  return encoded;
}

TransitionCell Lookup(const EncodedTable& encoded, StateId state,
                      DnaSymbol symbol) {
  assert(state < encoded.num_states());
  const std::size_t index = state * EncodedTable::kPitch + Code(symbol);
  switch (encoded.variant().table_layout) {
    case TableLayout::kSplitArrays:
      return {encoded.next_states()[index], encoded.pattern_ids()[index]};
    case TableLayout::kInterleavedPairs:
      return encoded.pairs()[index];
    case TableLayout::kPackedWord:
      return encoded.packed_bits() == 32
                 ? UnpackCell32(encoded.packed32()[index])
                 : UnpackCell64(encoded.packed64()[index]);
  }
  return {};
}

TransitionTable DecodeTable(const EncodedTable& encoded) {
  std::vector<TransitionCell> cells;
  cells.reserve(encoded.num_states() * EncodedTable::kPitch);
  for (std::size_t s = 0; s < encoded.num_states(); ++s) {
    for (std::size_t sym = 0; sym < EncodedTable::kPitch; ++sym) {
      cells.push_back(Lookup(encoded, static_cast<StateId>(s),
                             static_cast<DnaSymbol>(sym)));
    }
  }
  const auto lengths = encoded.pattern_lengths();
  return TransitionTable::FromCells(
      std::move(cells), std::vector<std::uint32_t>(lengths.begin(),
                                                   lengths.end()));
}

std::vector<MatchRecord> ScanPfacWithLayout(const EncodedTable& encoded,
                                            std::string_view text,
                                            const ScanPolicy& policy,
                                            std::size_t workers,
                                            std::size_t chunk_bytes) {
  if (chunk_bytes == 0) {
    throw Error(ErrorCode::kInvalidArgument, "chunk size must be positive");
  }
  switch (encoded.variant().table_layout) {
    case TableLayout::kSplitArrays:
      return ScanWith(
          SplitView{encoded.next_states().data(), encoded.pattern_ids().data()},
          encoded, text, policy, workers, chunk_bytes);
    case TableLayout::kInterleavedPairs:
      return ScanWith(internal::CellView{encoded.pairs().data()}, encoded,
                      text, policy, workers, chunk_bytes);
    case TableLayout::kPackedWord:
      if (encoded.packed_bits() == 32) {
        return ScanWith(Packed32View{encoded.packed32().data()}, encoded, text,
                        policy, workers, chunk_bytes);
      }
      return ScanWith(Packed64View{encoded.packed64().data()}, encoded, text,
                      policy, workers, chunk_bytes);
  }
  return {};
}

}  // namespace pfac
