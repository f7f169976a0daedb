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

#include "pfac/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <limits>
#include <optional>
#include <ostream>

#include "pfac/error.h"

namespace pfac {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t OracleCount(const PatternSet& patterns, std::string_view text,
                          MatchMode mode) {
  std::vector<MatchRecord> all = ScanNaive(patterns, text);
  if (mode == MatchMode::kAllMatches) return all.size();
  return LongestOnlyFilter(std::move(all)).size();
}

}  // namespace

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  if (values.size() % 2 == 1) return values[mid];
  const double upper = values[mid];
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return (lower + upper) / 2;
}

std::string FormatDecimal(double value, int precision) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::fixed, precision);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::vector<BenchResult> RunBench(
    const BenchConfig& config,
    const std::function<void(const BenchResult&)>& on_result) {
  if (config.repetitions < 3 || config.warmup_runs < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "bench needs at least 3 repetitions and 1 warmup run");
  }
  if (std::any_of(config.worker_counts.begin(), config.worker_counts.end(),
                  [](std::size_t w) { return w == 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "worker counts must be >= 1");
  }
  const ScanPolicy policy{config.mode, NonDnaPolicy::kBarrier};
  std::vector<BenchResult> results;
  for (const NamedPatterns& patterns : config.pattern_sets) {
    const TransitionTable table = BuildTrie(patterns.patterns);
    for (const NamedText& data : config.data_sets) {
      std::optional<std::uint64_t> expected;
      if (config.oracle_max_bytes != 0 &&
          data.text.size() <= config.oracle_max_bytes) {
        expected = OracleCount(patterns.patterns, data.text, config.mode);
      }
      std::string first_cell;
      for (LayoutVariant variant : config.variants) {
        const EncodedTable encoded = EncodeTable(table, variant);
        for (std::size_t workers : config.worker_counts) {
          BenchResult result;
          result.variant = variant;
          result.workers = workers;
          result.pattern_set = patterns.label;
          result.data_set = data.label;

          for (int i = 0; i < config.warmup_runs; ++i) {
            result.match_count = ScanPfacWithLayout(encoded, data.text, policy,
                                                    workers,
                                                    config.chunk_bytes)
                                     .size();
          }
          std::vector<double> seconds;
          for (int i = 0; i < config.repetitions; ++i) {
            const auto start = Clock::now();
            const std::vector<MatchRecord> matches = ScanPfacWithLayout(
                encoded, data.text, policy, workers, config.chunk_bytes);
            const auto stop = Clock::now();
            seconds.push_back(
                std::chrono::duration<double>(stop - start).count());
            if (matches.size() != result.match_count) {
              throw Error(ErrorCode::kMatchCountMismatch,
                          "match count changed between repetitions of " +
                              ToString(variant));
            }
          }
          result.median_seconds = Median(seconds);
          result.min_seconds = *std::min_element(seconds.begin(), seconds.end());
          result.throughput_mb_per_s =
              result.median_seconds > 0
                  ? static_cast<double>(data.text.size()) / 1e6 /
                        result.median_seconds
                  : 0;

          const std::string cell = ToString(variant) + " workers=" +
                                   std::to_string(workers);
          if (!expected) {
            expected = result.match_count;
            first_cell = cell;
          } else if (*expected != result.match_count) {
            throw Error(
                ErrorCode::kMatchCountMismatch,
                cell + " on " + patterns.label + "/" + data.label + " found " +
                    std::to_string(result.match_count) + " matches, expected " +
                    std::to_string(*expected) +
                    (first_cell.empty() ? " (naive oracle)"
                                        : " (from " + first_cell + ")"));
          }
          if (on_result) on_result(result);
          results.push_back(std::move(result));
        }
      }
    }
  }
  return results;
}

void WriteBenchCsv(std::span<const BenchResult> results, std::ostream& out) {
  out << "variant,workers,pattern_set,data_set,median_s,min_s,"
         "throughput_mbps,match_count\n";
  for (const BenchResult& r : results) {
    out << ToString(r.variant) << ',' << r.workers << ',' << r.pattern_set
        << ',' << r.data_set << ',' << FormatDecimal(r.median_seconds, 9)
        << ',' << FormatDecimal(r.min_seconds, 9) << ','
        << FormatDecimal(r.throughput_mb_per_s, 3) << ',' << r.match_count
        << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kWriteFailure, "failed to write bench CSV");
}

std::vector<ComparisonRow> CompareReport(std::span<const BenchResult> results,
                                         LayoutVariant baseline) {
  if (results.empty()) {
    throw Error(ErrorCode::kMissingBaseline, "no results to compare");
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(results.size());
  for (const BenchResult& r : results) {
    const auto base = std::find_if(
        results.begin(), results.end(), [&](const BenchResult& b) {
          return b.variant == baseline && b.workers == r.workers &&
                 b.pattern_set == r.pattern_set && b.data_set == r.data_set;
        });
    if (base == results.end()) {
      throw Error(ErrorCode::kMissingBaseline,
                  "no " + ToString(baseline) + " result for workers=" +
                      std::to_string(r.workers) + " on " + r.pattern_set +
                      "/" + r.data_set);
    }
    ComparisonRow row;
    row.result = r;
    row.baseline_median_seconds = base->median_seconds;
    if (base->median_seconds > 0) {
      row.time_ratio = r.median_seconds / base->median_seconds;
    } else {
      row.time_ratio = r.median_seconds > 0
                           ? std::numeric_limits<double>::infinity()
                           : 1;
    }
    row.slower_than_baseline = row.time_ratio > 1 + kSlowerTolerance;
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteComparisonCsv(std::span<const ComparisonRow> rows,
                        std::ostream& out) {
  out << "variant,workers,pattern_set,data_set,median_s,baseline_median_s,"
         "time_ratio,slower_than_baseline\n";
  for (const ComparisonRow& row : rows) {
    const BenchResult& r = row.result;
    out << ToString(r.variant) << ',' << r.workers << ',' << r.pattern_set
        << ',' << r.data_set << ',' << FormatDecimal(r.median_seconds, 9)
        << ',' << FormatDecimal(row.baseline_median_seconds, 9) << ','
        << FormatDecimal(row.time_ratio, 4) << ','
        << (row.slower_than_baseline ? "yes" : "no") << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kWriteFailure, "failed to write report");
}

}  // namespace pfac
