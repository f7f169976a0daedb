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

#include "pfac/datagen.h"

#include <array>
#include <cmath>
#include <unordered_set>

#include "pfac/dna.h"
#include "pfac/error.h"

namespace pfac {

namespace {

constexpr std::size_t kMiB = std::size_t{1} << 20;
constexpr int kMaxAttemptsPerPattern = 1000;

constexpr std::array<std::size_t, 5> kDataSetMiB = {76, 152, 228, 304, 380};
constexpr std::array<std::size_t, 5> kMiniMiB = {1, 2, 4, 8, 16};

// Number of distinct strings with lengths in [lo, hi], saturating.
double SpaceSize(std::size_t lo, std::size_t hi) {
  double total = 0;
  for (std::size_t len = lo; len <= hi && total < 1e18; ++len) {
    total += std::pow(4.0, static_cast<double>(len));
  }
  return total;
}

// Index of a preset name like "ps3" -> 2, or -1.
int PresetIndex(std::string_view name, std::string_view prefix) {
  if (name.size() != prefix.size() + 1 || !name.starts_with(prefix)) return -1;
  const char digit = name.back();
  return digit >= '1' && digit <= '5' ? digit - '1' : -1;
}

}  // namespace

PatternSet GenPatterns(const GenSpec& spec) {
  if (spec.pattern_count == 0 || spec.min_length == 0 ||
      spec.min_length > spec.max_length) {
    throw Error(ErrorCode::kInvalidArgument,
                "pattern generation needs count >= 1 and 1 <= min <= max "
                "length");
  }
  if (SpaceSize(spec.min_length, spec.max_length) <
      static_cast<double>(spec.pattern_count)) {
    throw Error(ErrorCode::kDuplicateSaturation,
                "only " +
                    std::to_string(static_cast<std::uint64_t>(
                        SpaceSize(spec.min_length, spec.max_length))) +
                    " distinct patterns exist for the requested lengths");
  }
  SymbolStream stream(spec.seed);
  const std::uint64_t span = spec.max_length - spec.min_length + 1;
  std::vector<std::string> patterns;
  patterns.reserve(spec.pattern_count);
  std::unordered_set<std::string> seen;
  seen.reserve(spec.pattern_count);
  while (patterns.size() < spec.pattern_count) {
    std::string candidate;
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxAttemptsPerPattern) {
        throw Error(ErrorCode::kDuplicateSaturation,
                    "could not draw a unique pattern " +
                        std::to_string(patterns.size() + 1) + " after " +
                        std::to_string(kMaxAttemptsPerPattern) + " attempts");
      }
      const std::size_t length =
          spec.min_length +
          (span == 1 ? 0 : static_cast<std::size_t>(stream.NextWord() % span));
      candidate.resize(length);
      for (char& ch : candidate) ch = kSymbolLetters[stream.NextCode()];
      if (seen.insert(candidate).second) break;
    }
    patterns.push_back(std::move(candidate));
  }
  return PatternSet(std::move(patterns));
}

std::string GenText(const GenSpec& spec) {
  std::string text(spec.text_length, '\0');
  SymbolStream stream(spec.seed ^ kTextSeedSalt);
  for (char& ch : text) ch = kSymbolLetters[stream.NextCode()];
  return text;
}

std::optional<GenSpec> PatternPreset(std::string_view name,
                                     std::uint64_t seed) {
  const int index = PresetIndex(name, "ps");
  if (index < 0) return std::nullopt;
  GenSpec spec;
  spec.seed = seed;
  spec.pattern_count = 1000 * static_cast<std::size_t>(index + 1);
  spec.min_length = spec.max_length = 100;
  return spec;
}

std::optional<GenSpec> TextPreset(std::string_view name, std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  if (int index = PresetIndex(name, "ds"); index >= 0) {
    spec.text_length = kDataSetMiB[index] * kMiB;
  } else if (index = PresetIndex(name, "mini"); index >= 0) {
    spec.text_length = kMiniMiB[index] * kMiB;
  } else {
    return std::nullopt;
  }
  return spec;
}

std::vector<std::string> PatternPresetNames() {
  return {"ps1", "ps2", "ps3", "ps4", "ps5"};
}

std::vector<std::string> TextPresetNames() {
  return {"ds1",   "ds2",   "ds3",   "ds4",   "ds5",
          "mini1", "mini2", "mini3", "mini4", "mini5"};
}

std::string Describe(const GenSpec& spec) {
  std::string out = "seed=" + std::to_string(spec.seed);
  if (spec.pattern_count != 0) {
    out += " pattern_count=" + std::to_string(spec.pattern_count) +
           " length=" + std::to_string(spec.min_length);
    if (spec.max_length != spec.min_length) {
      out += ".." + std::to_string(spec.max_length);
    }
  } else {
    out += " text_length=" + std::to_string(spec.text_length);
  }
  return out + " prng=mt19937_64";
}

}  // namespace pfac
