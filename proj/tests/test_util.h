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

// Random inputs and brute-force oracles shared by the unit and acceptance
// tests. Nothing here calls the scanners under test.

#ifndef PFAC_TESTS_TEST_UTIL_H_
#define PFAC_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string_view>
#include <tuple>
#include <string>
#include <unordered_set>
#include <vector>

#include "pfac/automaton.h"
#include "pfac/matcher.h"

namespace pfac::testing {

inline std::size_t Uniform(std::mt19937_64& rng, std::size_t lo,
                           std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline std::string RandomString(std::mt19937_64& rng, std::size_t length,
                                std::string_view alphabet) {
  std::string s(length, ' ');
  for (char& c : s) c = alphabet[Uniform(rng, 0, alphabet.size() - 1)];
  return s;
}

// Distinct patterns; a small alphabet subset is sometimes used so that shared
// prefixes and suffix overlaps are common.
inline PatternSet RandomPatterns(std::mt19937_64& rng, std::size_t max_count,
                                 std::size_t max_length) {
  const std::size_t count = Uniform(rng, 1, max_count);
  const std::string_view alphabet = rng() % 3 == 0 ? "AC" : "ACGT";
  std::vector<std::string> patterns;
  std::unordered_set<std::string> seen;
  for (std::size_t tries = 0; patterns.size() < count && tries < 50 * count;
       ++tries) {
    std::string p = RandomString(rng, Uniform(rng, 1, max_length), alphabet);
    if (seen.insert(p).second) patterns.push_back(std::move(p));
  }
  return PatternSet(std::move(patterns));
}

// Mostly DNA with occasional N; sometimes biased towards the patterns'
// letters so hits are frequent.
inline std::string RandomText(std::mt19937_64& rng, std::size_t max_length) {
  const std::size_t length = Uniform(rng, 0, max_length);
  switch (rng() % 3) {
    case 0: return RandomString(rng, length, "ACGTN");
    case 1: return RandomString(rng, length, "AACCGGTTACGTACGTN");
    default: return RandomString(rng, length, "ACACACACN");
  }
}

// Every occurrence, found with std::string::find per pattern.
inline std::vector<MatchRecord> FindAllOccurrences(const PatternSet& patterns,
                                                   const std::string& text) {
  std::vector<MatchRecord> out;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const std::string& p = patterns.patterns()[i];
    for (std::size_t pos = text.find(p); pos != std::string::npos;
         pos = text.find(p, pos + 1)) {
      out.push_back({pos, static_cast<std::uint32_t>(p.size()),
                     static_cast<PatternId>(i + 1)});
    }
  }
  std::sort(out.begin(), out.end(), MatchOrder);
  return out;
}

// Longest proper suffix of each state's path string that is itself a state's
// path string, found by trying every suffix.
inline std::vector<StateId> BruteForceFailure(
    const std::vector<std::string>& paths) {
  std::map<std::string, StateId> by_path;
  for (std::size_t s = 0; s < paths.size(); ++s) {
    by_path[paths[s]] = static_cast<StateId>(s);
  }
  std::vector<StateId> failure(paths.size(), kRootState);
  for (std::size_t s = 1; s < paths.size(); ++s) {
    for (std::size_t cut = 1; cut < paths[s].size(); ++cut) {
      auto it = by_path.find(paths[s].substr(cut));
      if (it != by_path.end()) {
        failure[s] = it->second;
        break;
      }
    }
  }
  return failure;
}

// Records re-keyed by pattern text, for comparing tables whose ids differ.
inline std::set<std::tuple<std::uint64_t, std::uint32_t, std::string>>
ByPatternText(const std::vector<MatchRecord>& records,
              const PatternSet& patterns) {
  std::set<std::tuple<std::uint64_t, std::uint32_t, std::string>> out;
  for (const auto& r : records) {
    out.emplace(r.start, r.length, std::string(patterns.pattern(r.pattern_id)));
  }
  return out;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("pfac_dna_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace pfac::testing

#endif  // PFAC_TESTS_TEST_UTIL_H_
