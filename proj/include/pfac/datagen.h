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

#ifndef PFAC_DATAGEN_H_
#define PFAC_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pfac/automaton.h"

namespace pfac {

// Deterministic synthetic data. Everything is drawn from std::mt19937_64 (the
// standard fixes its output sequence), seeded with `seed`, two bits per
// symbol taken from the most significant end of each 64-bit output. Codes
// map to A, T, C, G. No std distributions are used, so the bytes are the same
// on every platform. Text streams are seeded with seed ^ kTextSeedSalt so a
// corpus never replays the patterns generated from the same seed.
struct GenSpec {
  std::uint64_t seed = 42;
  std::size_t pattern_count = 0;
  // Inclusive length range; equal bounds give fixed-length patterns.
  std::size_t min_length = 100;
  std::size_t max_length = 100;
  std::size_t text_length = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

inline constexpr std::uint64_t kTextSeedSalt = 0x9e3779b97f4a7c15ull;

class SymbolStream {
 public:
  explicit SymbolStream(std::uint64_t seed) : engine_(seed) {}

  // Next symbol code in 0..3.
  std::uint8_t NextCode() {
    if (remaining_ == 0) {
      word_ = engine_();
      remaining_ = 32;
    }
    --remaining_;
    return static_cast<std::uint8_t>((word_ >> (2 * remaining_)) & 3);
  }

  // Raw 64-bit draw; discards any buffered symbols.
  std::uint64_t NextWord() {
    remaining_ = 0;
    return engine_();
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  unsigned remaining_ = 0;
};

// Unique random patterns. Throws InvalidArgument for a zero count or length,
// DuplicateSaturation when uniqueness cannot be reached.
PatternSet GenPatterns(const GenSpec& spec);

// Exactly spec.text_length bytes over {A,C,G,T}.
std::string GenText(const GenSpec& spec);

// Pattern presets ps1..ps5: 1000..5000 patterns of length 100.
std::optional<GenSpec> PatternPreset(std::string_view name,
                                     std::uint64_t seed);
// Text presets ds1..ds5 (76..380 MiB) and mini1..mini5 (1, 2, 4, 8, 16 MiB).
std::optional<GenSpec> TextPreset(std::string_view name, std::uint64_t seed);

std::vector<std::string> PatternPresetNames();
std::vector<std::string> TextPresetNames();

// One-line description of a spec, for provenance output.
std::string Describe(const GenSpec& spec);

}  // namespace pfac

#endif  // PFAC_DATAGEN_H_
