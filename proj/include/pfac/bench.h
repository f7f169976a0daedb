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

#ifndef PFAC_BENCH_H_
#define PFAC_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pfac/automaton.h"
#include "pfac/layouts.h"
#include "pfac/matcher.h"

namespace pfac {

struct NamedPatterns {
  std::string label;
  PatternSet patterns;
};

struct NamedText {
  std::string label;
  std::string text;
};

struct BenchConfig {
  std::vector<LayoutVariant> variants;
  std::vector<std::size_t> worker_counts;
  std::vector<NamedPatterns> pattern_sets;
  std::vector<NamedText> data_sets;
  int repetitions = 3;  // >= 3
  int warmup_runs = 1;  // >= 1
  MatchMode mode = MatchMode::kLongestOnly;
  std::size_t chunk_bytes = kDefaultChunkBytes;
  // Texts up to this size are also checked against the naive scanner's match
  // count. 0 disables the check.
  std::size_t oracle_max_bytes = std::size_t{1} << 20;
};

struct BenchResult {
  LayoutVariant variant;
  std::size_t workers = 1;
  std::string pattern_set;
  std::string data_set;
  double median_seconds = 0;
  double min_seconds = 0;
  double throughput_mb_per_s = 0;
  std::uint64_t match_count = 0;
};

// Runs every (patterns, data, variant, workers) cell sequentially. Only the
// scan call is timed; trie construction and encoding happen beforehand.
// Throws MatchCountMismatch if cells sharing (patterns, data) disagree or
// differ from the oracle count. `on_result` is called after each cell.
std::vector<BenchResult> RunBench(
    const BenchConfig& config,
    const std::function<void(const BenchResult&)>& on_result = {});

double Median(std::vector<double> values);

// Fixed-point decimal with '.' regardless of the global locale.
std::string FormatDecimal(double value, int precision);

// Header: variant,workers,pattern_set,data_set,median_s,min_s,
// throughput_mbps,match_count
void WriteBenchCsv(std::span<const BenchResult> results, std::ostream& out);

struct ComparisonRow {
  BenchResult result;
  double baseline_median_seconds = 0;
  // median / baseline median; > 1 means slower than the baseline.
  double time_ratio = 1;
  bool slower_than_baseline = false;
};

// Slower means time_ratio > 1 + kSlowerTolerance.
inline constexpr double kSlowerTolerance = 0.05;

// Pairs every result with the baseline variant's result for the same workers,
// pattern set and data set. Throws MissingBaseline.
std::vector<ComparisonRow> CompareReport(std::span<const BenchResult> results,
                                         LayoutVariant baseline);

void WriteComparisonCsv(std::span<const ComparisonRow> rows,
                        std::ostream& out);

}  // namespace pfac

#endif  // PFAC_BENCH_H_
