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

// Per-offset failure-less scanning loop shared by every table layout.
// Internal header: not installed, included by the library and its tests.

#ifndef PFAC_SRC_SCAN_KERNEL_H_
#define PFAC_SRC_SCAN_KERNEL_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pfac/automaton.h"
#include "pfac/dna.h"
#include "pfac/matcher.h"

namespace pfac::internal {

struct NoProbe {
  void Chunk(std::size_t /*begin*/, std::size_t /*end*/) {}
  void Read(std::size_t /*absolute*/) {}
};

// Records, for staged scans, how far past its chunk end any scanner read.
struct OverhangProbe {
  std::size_t chunk_end = 0;
  std::size_t max_excess = 0;
  std::size_t max_read = 0;
  std::size_t chunks = 0;

  void Chunk(std::size_t /*begin*/, std::size_t end) {
    chunk_end = end;
    ++chunks;
  }
  void Read(std::size_t absolute) {
    max_read = std::max(max_read, absolute);
    if (absolute >= chunk_end) {
      max_excess = std::max(max_excess, absolute - chunk_end + 1);
    }
  }
};

// Table adaptor over TransitionTable's interleaved cells.
struct CellView {
  const TransitionCell* cells;
  TransitionCell Load(std::size_t index) const { return cells[index]; }
};

// Runs one scanner for each start in [first, last) over `window`, whose byte 0
// sits at absolute offset `base`. Appends records in MatchOrder.
template <class Table, class Probe>
void ScanStarts(const Table& table, std::string_view window, std::size_t first,
                std::size_t last, std::uint64_t base, MatchMode mode,
                std::vector<MatchRecord>& out, Probe& probe) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(window.data());
  const std::size_t size = window.size();
  for (std::size_t start = first; start < last; ++start) {
    StateId state = kRootState;
    MatchRecord longest;
    const std::size_t mark = out.size();
    for (std::size_t pos = start; pos < size; ++pos) {
      probe.Read(base + pos);
      const std::uint8_t code = kSymbolTable[bytes[pos]];
      if (code == kNoSymbol) break;
      const TransitionCell cell =
          table.Load(std::size_t{state} * TransitionTable::kPitch + code);
      if (cell.next_state == kNoTransition) break;
      if (cell.matched_pattern_id != kNoPattern) {
        const MatchRecord record{base + start,
                                 static_cast<std::uint32_t>(pos - start + 1),
                                 cell.matched_pattern_id};
        if (mode == MatchMode::kAllMatches) {
          out.push_back(record);
        } else {
          longest = record;
        }
      }
      state = cell.next_state;
    }
    if (mode == MatchMode::kLongestOnly) {
      if (longest.pattern_id != kNoPattern) out.push_back(longest);
    } else if (out.size() - mark > 1) {
      std::sort(out.begin() + mark, out.end(), MatchOrder);
    }
  }
}

// Staged variant: each chunk of starts is copied, together with the overhang
// any scanner starting inside it can reach, into a worker-private buffer.
template <class Table, class Probe>
void ScanStartsStaged(const Table& table, std::string_view text,
                      std::size_t first, std::size_t last,
                      std::size_t chunk_bytes, std::uint32_t max_pattern_length,
                      MatchMode mode, std::vector<MatchRecord>& out,
                      Probe& probe) {
  const std::size_t overhang =
      max_pattern_length == 0 ? 0 : max_pattern_length - 1;
  std::string buffer;
  buffer.reserve(std::min(chunk_bytes, last - first) + overhang);
  for (std::size_t begin = first; begin < last; begin += chunk_bytes) {
    const std::size_t end = std::min(last, begin + chunk_bytes);
    const std::size_t stop = std::min(text.size(), end + overhang);
    buffer.assign(text.data() + begin, stop - begin);
    probe.Chunk(begin, end);
    ScanStarts(table, std::string_view(buffer), 0, end - begin, begin, mode,
               out, probe);
  }
}

// Splits [0, n) into `workers` contiguous ranges, runs fn(first, last, out)
// on each (one thread per range when workers > 1) and concatenates the
// per-range outputs in range order.
template <class Fn>
std::vector<MatchRecord> RunPartitioned(std::size_t n, std::size_t workers,
                                        Fn fn) {
  std::vector<MatchRecord> result;
  if (n == 0) return result;
  workers = std::clamp<std::size_t>(workers, 1, n);
  if (workers == 1) {
    fn(std::size_t{0}, n, result);
    return result;
  }
  const std::size_t span = (n + workers - 1) / workers;
  std::vector<std::vector<MatchRecord>> buffers(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = std::min(n, w * span);
      const std::size_t last = std::min(n, first + span);
      threads.emplace_back(
          [&fn, &buffers, w, first, last] { fn(first, last, buffers[w]); });
    }
  }
  std::size_t total = 0;
  for (const auto& b : buffers) total += b.size();
  result.reserve(total);
  for (auto& b : buffers) result.insert(result.end(), b.begin(), b.end());
  return result;
}

}  // namespace pfac::internal

#endif  // PFAC_SRC_SCAN_KERNEL_H_
