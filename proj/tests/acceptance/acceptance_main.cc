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

// Acceptance suite. Runs each exit criterion at its stated tolerance and
// prints one PASS/FAIL/SKIP line per criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pfac/automaton.h"
#include "pfac/bench.h"
#include "pfac/cli.h"
#include "pfac/datagen.h"
#include "pfac/layouts.h"
#include "pfac/matcher.h"
#include "pfac/text_io.h"
#include "test_util.h"

namespace pfac {
namespace {

using Records = std::vector<MatchRecord>;
using testing::TempDir;

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

Outcome Pass(std::string detail) { return {Verdict::kPass, std::move(detail)}; }
Outcome Fail(std::string detail) { return {Verdict::kFail, std::move(detail)}; }
Outcome Check(bool ok, std::string detail) {
  return {ok ? Verdict::kPass : Verdict::kFail, std::move(detail)};
}

std::string Fixed(double v, int digits = 3) { return FormatDecimal(v, digits); }

std::size_t Cores() {
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string RunCliCapture(std::vector<std::string> args, int* status) {
  args.insert(args.begin(), "pfac-dna");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  *status = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

// Shared randomized corpus for criteria 1 and 3: patterns 1-50 of length
// 1-20, texts of 0-5000 bytes over {A,C,G,T,N}.
constexpr int kRandomCases = 1000;
constexpr std::uint64_t kCorpusSeed = 0x5eed;

Outcome OracleEquivalence() {
  const auto begin = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kCorpusSeed);
  const ScanPolicy all{MatchMode::kAllMatches};
  std::size_t total_matches = 0;
  for (int c = 0; c < kRandomCases; ++c) {
    const PatternSet patterns = testing::RandomPatterns(rng, 50, 20);
    const std::string text = testing::RandomText(rng, 5000);
    const TransitionTable table = BuildTrie(patterns);
    const Records naive = ScanNaive(patterns, text);
    total_matches += naive.size();
    if (ScanSerialAc(BuildFailure(table), text) != naive) {
      return Fail("serial AC differs from naive in case " + std::to_string(c));
    }
    for (std::size_t workers : {1, 2, 4, 8}) {
      if (ScanPfac(table, text, all, workers) != naive) {
        return Fail("PFAC differs in case " + std::to_string(c));
      }
      for (LayoutVariant v : AllLayoutVariants()) {
        if (ScanPfacWithLayout(EncodeTable(table, v), text, all, workers) !=
            naive) {
          return Fail(ToString(v) + " workers=" + std::to_string(workers) +
                      " differs in case " + std::to_string(c));
        }
      }
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - begin)
                             .count();
  return Check(seconds < 60.0,
               std::to_string(kRandomCases) + " cases, " +
                   std::to_string(total_matches) +
                   " matches, 6 variants x workers {1,2,4,8}, " +
                   Fixed(seconds, 1) + "s (limit 60s)");
}

Outcome WorkedExample() {
  TempDir dir;
  WriteFile(dir / "fig.txt", "AC\nACG\nCTGT\nTG\n");
  const std::string expected =
      "patterns=4 states=10\n"
      "pattern 1 AC state 2\n"
      "pattern 2 ACG state 3\n"
      "pattern 3 CTGT state 7\n"
      "pattern 4 TG state 9\n";
  int status = 0;
  const std::string out =
      RunCliCapture({"inspect", (dir / "fig.txt").string()}, &status);
  const std::size_t states =
      StateCount(BuildTrie(PatternSet({"AC", "ACG", "CTGT", "TG"})));
  return Check(status == 0 && out == expected && states == 10,
               "10-state trie, terminals AC=2 ACG=3 CTGT=7 TG=9; inspect "
               "output " +
                   std::string(out == expected ? "byte-exact" : "MISMATCH:\n" + out));
}

Outcome LongestOnlySemantics() {
  std::mt19937_64 rng(kCorpusSeed);
  for (int c = 0; c < kRandomCases; ++c) {
    const PatternSet patterns = testing::RandomPatterns(rng, 50, 20);
    const std::string text = testing::RandomText(rng, 5000);
    const TransitionTable table = BuildTrie(patterns);
    const Records filtered =
        LongestOnlyFilter(ScanPfac(table, text, {MatchMode::kAllMatches}));
    for (std::size_t workers : {1, 2, 4, 8}) {
      if (ScanPfac(table, text, {MatchMode::kLongestOnly}, workers) !=
          filtered) {
        return Fail("longest-only differs from filtered all-matches in case " +
                    std::to_string(c));
      }
      for (LayoutVariant v : AllLayoutVariants()) {
        if (ScanPfacWithLayout(EncodeTable(table, v), text,
                               {MatchMode::kLongestOnly}, workers) != filtered) {
          return Fail(ToString(v) + " longest-only differs in case " +
                      std::to_string(c));
        }
      }
    }
  }
  const Records acg =
      ScanPfac(BuildTrie(PatternSet({"AC", "ACG", "CTGT", "TG"})), "ACG",
               {MatchMode::kLongestOnly});
  return Check(acg == Records{{0, 3, 2}},
               std::to_string(kRandomCases) +
                   " cases equal; text ACG reports only ACG (0,3,2)");
}

Outcome Determinism() {
  TempDir dir;
  const std::string patterns = (dir / "ps3.txt").string();
  const std::string short_patterns = (dir / "ps3_10mers.txt").string();
  const std::string corpus = (dir / "mini5.txt").string();
  int status = 0;
  RunCliCapture({"gen", "patterns", "ps3", "--out", patterns}, &status);
  if (status != 0) return Fail("gen patterns failed");
  RunCliCapture({"gen", "text", "mini5", "--out", corpus}, &status);
  if (status != 0) return Fail("gen text failed");
  // Same pattern count with length 10, so the output is not empty.
  RunCliCapture({"gen", "patterns", "--count", "3000", "--length", "10",
                 "--out", short_patterns},
                &status);
  if (status != 0) return Fail("gen short patterns failed");

  std::vector<std::string> worker_counts{"1"};
  if (Cores() > 1) worker_counts.push_back(std::to_string(Cores()));
  if (Cores() != 8) worker_counts.push_back("8");
  std::string detail;
  for (const std::string& set : {patterns, short_patterns}) {
    std::string reference;
    std::size_t runs = 0;
    for (const std::string& workers : worker_counts) {
      for (int run = 0; run < 5; ++run) {
        const std::string out_path = (dir / "out.tsv").string();
        RunCliCapture({"match", set, corpus, "--workers", workers, "--out",
                       out_path},
                      &status);
        if (status != 0) return Fail("match failed");
        const std::string bytes = ReadFile(out_path);
        if (runs++ == 0) {
          reference = bytes;
        } else if (bytes != reference) {
          return Fail("output differs at workers=" + workers + " run " +
                      std::to_string(run));
        }
      }
    }
    detail += std::filesystem::path(set).stem().string() + ": " +
              std::to_string(runs) + " runs identical (" +
              std::to_string(std::count(reference.begin(), reference.end(),
                                        '\n')) +
              " lines); ";
  }
  return Pass(detail + "16 MiB corpus, workers {" +
              [&] {
                std::string s;
                for (const auto& w : worker_counts) s += (s.empty() ? "" : ",") + w;
                return s;
              }() +
              "}");
}

// One timed configuration for InterleavedMedians.
struct TimedScan {
  const EncodedTable* table;
  std::string_view text;
  std::size_t workers;
};

// Median scan seconds per configuration. Each repetition runs every
// configuration once in turn, so slow drift in machine load affects all of
// them alike instead of biasing whichever ran last.
std::vector<double> InterleavedMedians(const std::vector<TimedScan>& scans,
                                       int reps) {
  std::vector<std::vector<double>> samples(scans.size());
  for (int rep = -1; rep < reps; ++rep) {
    for (std::size_t i = 0; i < scans.size(); ++i) {
      const auto begin = std::chrono::steady_clock::now();
      const Records records =
          ScanPfacWithLayout(*scans[i].table, scans[i].text, {},
                             scans[i].workers);
      const double seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - begin)
                                 .count();
      if (rep >= 0) samples[i].push_back(seconds);
    }
  }
  std::vector<double> medians;
  for (const auto& s : samples) medians.push_back(Median(s));
  return medians;
}

std::string Corpus(std::size_t mib, std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  spec.text_length = mib << 20;
  return GenText(spec);
}

Outcome ScalingLinearity() {
  const PatternSet ps3 = GenPatterns(*PatternPreset("ps3", 42));
  const EncodedTable table =
      EncodeTable(BuildTrie(ps3), ParseLayoutVariant("merged+staged"));
  const std::string c16 = Corpus(16, 1);
  const std::string c32 = Corpus(32, 2);
  const std::string c64 = Corpus(64, 3);
  const auto medians = InterleavedMedians(
      {{&table, c16, Cores()}, {&table, c32, Cores()}, {&table, c64, Cores()}},
      5);
  const double r1 = medians[1] / medians[0];
  const double r2 = medians[2] / medians[1];
  auto in_band = [](double r) { return r >= 1.6 && r <= 2.4; };
  return Check(in_band(r1) && in_band(r2),
               "median 16/32/64 MiB = " + Fixed(medians[0]) + "/" +
                   Fixed(medians[1]) + "/" + Fixed(medians[2]) +
                   "s; t(32)/t(16)=" + Fixed(r1) + " t(64)/t(32)=" + Fixed(r2) +
                   " (band [1.6, 2.4])");
}

Outcome ParallelSpeedup() {
  if (Cores() < 4) {
    return {Verdict::kSkip,
            "requires >= 4 cores; this machine reports " +
                std::to_string(Cores())};
  }
  const PatternSet ps5 = GenPatterns(*PatternPreset("ps5", 42));
  const EncodedTable table =
      EncodeTable(BuildTrie(ps5), ParseLayoutVariant("merged+staged"));
  const std::string corpus = Corpus(64, 3);
  const auto medians =
      InterleavedMedians({{&table, corpus, 1}, {&table, corpus, 4}}, 5);
  const double speedup = medians[0] / medians[1];
  return Check(speedup >= 2.0, "workers=1 " + Fixed(medians[0]) +
                                   "s, workers=4 " + Fixed(medians[1]) +
                                   "s, speedup " + Fixed(speedup, 2) +
                                   "x (need >= 2.0x)");
}

Outcome LayoutContrast() {
  const std::string corpus = Corpus(64, 3);
  std::string detail;
  bool ok = true;
  for (const char* preset : {"ps4", "ps5"}) {
    const TransitionTable trie =
        BuildTrie(GenPatterns(*PatternPreset(preset, 42)));
    const EncodedTable split =
        EncodeTable(trie, ParseLayoutVariant("split+direct"));
    const EncodedTable merged =
        EncodeTable(trie, ParseLayoutVariant("merged+direct"));
    const auto medians = InterleavedMedians(
        {{&split, corpus, Cores()}, {&merged, corpus, Cores()}}, 9);
    ok = ok && medians[1] <= medians[0];
    detail += std::string(preset) + ": merged " + Fixed(medians[1]) +
              "s / split " + Fixed(medians[0]) +
              "s = " + Fixed(medians[1] / medians[0]) + "; ";
  }
  return Check(ok, detail + "need merged <= split");
}

Outcome NonReproducibleClaims() {
  // Documentation criterion: the README must state which GPU-only results
  // are not reproduced and what replaces them.
  std::string readme;
  try {
    readme = ReadFile(std::filesystem::path(PFAC_SOURCE_DIR) / "README.md");
  } catch (const std::exception& e) {
    return Fail(e.what());
  }
  const bool stated =
      readme.find("## Results that are not reproduced") != std::string::npos;
  return Check(stated,
               "GPU baseline speedup and GPU-memory results are out of reach "
               "without the GPU; substituted by criteria 1-7 (README section " +
                   std::string(stated ? "present" : "MISSING") + ")");
}

Outcome DatagenFidelity() {
  TempDir dir;
  int status = 0;
  auto gen = [&](std::vector<std::string> args) {
    RunCliCapture(std::move(args), &status);
    return status == 0;
  };
  if (!gen({"gen", "patterns", "ps1", "--seed", "42", "--out",
            (dir / "a.txt").string()}) ||
      !gen({"gen", "patterns", "ps1", "--seed", "42", "--out",
            (dir / "b.txt").string()}) ||
      !gen({"gen", "text", "mini1", "--seed", "42", "--out",
            (dir / "c.txt").string()}) ||
      !gen({"gen", "text", "mini1", "--seed", "42", "--out",
            (dir / "d.txt").string()})) {
    return Fail("gen failed");
  }
  const std::string a = ReadFile(dir / "a.txt");
  const std::string c = ReadFile(dir / "c.txt");
  const std::size_t count = ReadPatterns(dir / "a.txt").size();
  const double deviation = std::abs(static_cast<double>(a.size()) - 101100.0) /
                           101100.0;
  const bool pure = c.find_first_not_of("ACGT") == std::string::npos;
  const bool same = a == ReadFile(dir / "b.txt") && c == ReadFile(dir / "d.txt");
  return Check(count == 1000 && deviation <= 0.02 && pure && same,
               "ps1: " + std::to_string(count) + " patterns, " +
                   std::to_string(a.size()) + " bytes (" +
                   Fixed(deviation * 100, 2) +
                   "% from 101.1KB, limit 2%); corpus alphabet " +
                   (pure ? "ACGT only" : "IMPURE") + "; reruns " +
                   (same ? "identical" : "DIFFER"));
}

}  // namespace
}  // namespace pfac

int main() {
  using pfac::Outcome;
  using pfac::Verdict;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {
          {"1 oracle equivalence", pfac::OracleEquivalence},
          {"2 worked example", pfac::WorkedExample},
          {"3 longest-only semantics", pfac::LongestOnlySemantics},
          {"4 determinism", pfac::Determinism},
          {"5 scaling linearity", pfac::ScalingLinearity},
          {"6 parallel speedup", pfac::ParallelSpeedup},
          {"7 layout contrast", pfac::LayoutContrast},
          {"8 non-reproducible claims", pfac::NonReproducibleClaims},
          {"9 datagen fidelity", pfac::DatagenFidelity},
      };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = pfac::Fail(std::string("exception: ") + e.what());
    }
    const char* tag = outcome.verdict == Verdict::kPass   ? "PASS"
                      : outcome.verdict == Verdict::kSkip ? "SKIP"
                                                          : "FAIL";
    if (outcome.verdict == Verdict::kFail) ++failures;
    std::cout << "[" << tag << "] " << name << ": " << outcome.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria met"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
