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

#include "pfac/matcher.h"

#include <random>

#include "gtest/gtest.h"
#include "pfac/automaton.h"
#include "pfac/dna.h"
#include "test_util.h"

namespace pfac {
namespace {

using ::pfac::testing::FindAllOccurrences;
using ::pfac::testing::RandomPatterns;
using ::pfac::testing::RandomText;

using Records = std::vector<MatchRecord>;

constexpr ScanPolicy kLongest{MatchMode::kLongestOnly};
constexpr ScanPolicy kAll{MatchMode::kAllMatches};

class GotoGraphTest : public ::testing::Test {
 protected:
  PatternSet patterns_{{"AC", "ACG", "CTGT", "TG"}};
  TransitionTable table_ = BuildTrie(patterns_);
  FailureAutomaton automaton_ = BuildFailure(table_);
};

TEST_F(GotoGraphTest, SerialFindsEveryOccurrence) {
  EXPECT_EQ(ScanSerialAc(automaton_, "ACTGT"),
            (Records{{0, 2, 1}, {1, 4, 3}, {2, 2, 4}}));
}

TEST_F(GotoGraphTest, SerialReportsOutputSetOfFailureChain) {
  EXPECT_EQ(ScanSerialAc(automaton_, "ACG"), (Records{{0, 2, 1}, {0, 3, 2}}));
}

TEST_F(GotoGraphTest, EmptyText) {
  EXPECT_TRUE(ScanSerialAc(automaton_, "").empty());
  EXPECT_TRUE(ScanPfac(table_, "", kAll).empty());
  EXPECT_TRUE(ScanPfac(table_, "", kLongest, 4).empty());
  EXPECT_TRUE(ScanNaive(patterns_, "").empty());
}

TEST_F(GotoGraphTest, PfacLongestOnly) {
  EXPECT_EQ(ScanPfac(table_, "ACTGT", kLongest),
            (Records{{0, 2, 1}, {1, 4, 3}, {2, 2, 4}}));
  EXPECT_EQ(ScanPfac(table_, "ACG", kLongest), (Records{{0, 3, 2}}));
}

TEST_F(GotoGraphTest, PfacAllMatches) {
  EXPECT_EQ(ScanPfac(table_, "ACG", kAll), (Records{{0, 2, 1}, {0, 3, 2}}));
}

TEST_F(GotoGraphTest, NonDnaIsABarrier) {
  EXPECT_TRUE(ScanPfac(table_, "NNNN", kAll).empty());
  EXPECT_TRUE(ScanSerialAc(automaton_, "NNNN").empty());
  EXPECT_EQ(ScanPfac(table_, "ACNTG", kAll), (Records{{0, 2, 1}, {3, 2, 4}}));
  EXPECT_EQ(ScanSerialAc(automaton_, "CTNGT"), Records{});
  EXPECT_EQ(ScanSerialAc(automaton_, "ACNTG"),
            (Records{{0, 2, 1}, {3, 2, 4}}));
}

TEST_F(GotoGraphTest, LowercaseTextMatches) {
  const Records expected{{0, 2, 1}, {1, 4, 3}, {2, 2, 4}};
  EXPECT_EQ(ScanPfac(table_, "actgt", kLongest), expected);
  EXPECT_EQ(ScanSerialAc(automaton_, "acTgt"), expected);
  EXPECT_EQ(ScanNaive(patterns_, "actGT"), expected);
}

TEST(ScanNaive, Examples) {
  EXPECT_EQ(ScanNaive(PatternSet({"AC"}), "ACAC"),
            (Records{{0, 2, 1}, {2, 2, 1}}));
  EXPECT_EQ(ScanNaive(PatternSet({"AAA"}), "AAAA"),
            (Records{{0, 3, 1}, {1, 3, 1}}));
  EXPECT_EQ(ScanNaive(PatternSet({"AC", "ACG", "CTGT", "TG"}), "ACTGT"),
            (Records{{0, 2, 1}, {1, 4, 3}, {2, 2, 4}}));
}

TEST(LongestOnlyFilter, Examples) {
  EXPECT_EQ(LongestOnlyFilter({{0, 2, 1}, {0, 3, 2}}), (Records{{0, 3, 2}}));
  EXPECT_TRUE(LongestOnlyFilter({}).empty());
  EXPECT_EQ(LongestOnlyFilter({{0, 5, 1}, {0, 3, 2}, {4, 1, 1}, {7, 2, 3}}),
            (Records{{0, 5, 1}, {4, 1, 1}, {7, 2, 3}}));
}

TEST(ScanPfac, MoreWorkersThanBytes) {
  const TransitionTable table = BuildTrie(PatternSet({"A", "AA"}));
  EXPECT_EQ(ScanPfac(table, "AAA", kAll, 16),
            (Records{{0, 1, 1}, {0, 2, 2}, {1, 1, 1}, {1, 2, 2}, {2, 1, 1}}));
}

TEST(MatcherPropertyTest, ScannersAgreeWithOracle) {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 300; ++iter) {
    const PatternSet patterns = RandomPatterns(rng, 50, 20);
    const std::string text = RandomText(rng, 3000);
    const TransitionTable table = BuildTrie(patterns);
    const Records oracle = FindAllOccurrences(patterns, text);

    ASSERT_EQ(ScanNaive(patterns, text), oracle);
    ASSERT_EQ(ScanSerialAc(BuildFailure(table), text), oracle);
    const Records longest = ScanPfac(table, text, kLongest, 1);
    ASSERT_EQ(longest, LongestOnlyFilter(oracle));
    for (std::size_t workers : {1, 2, 4, 8}) {
      ASSERT_EQ(ScanPfac(table, text, kAll, workers), oracle) << workers;
      ASSERT_EQ(ScanPfac(table, text, kLongest, workers), longest) << workers;
    }
    for (const MatchRecord& r : oracle) {
      ASSERT_EQ(text.substr(r.start, r.length), patterns.pattern(r.pattern_id));
    }
  }
}

TEST(MatcherPropertyTest, SplittingAtBarriersPreservesMatches) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const PatternSet patterns = RandomPatterns(rng, 20, 10);
    const std::string text = RandomText(rng, 2000);
    const TransitionTable table = BuildTrie(patterns);
    Records pieces;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i < text.size() && IsDna(text[i])) continue;
      for (MatchRecord r : ScanPfac(table, text.substr(begin, i - begin), kAll)) {
        r.start += begin;
        pieces.push_back(r);
      }
      begin = i + 1;
    }
    const Records whole = ScanPfac(table, text, kAll, 3);
    EXPECT_EQ(whole, pieces);
    for (const MatchRecord& r : whole) {
      for (std::size_t k = r.start; k < r.start + r.length; ++k) {
        ASSERT_TRUE(IsDna(text[k]));
      }
    }
  }
}

}  // namespace
}  // namespace pfac
