// Copyright 2026 The novl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "novl/query_engine.hpp"

#include <gtest/gtest.h>

#include <random>

#include "novl/oracle.hpp"
#include "support.hpp"

namespace novl {
namespace {

using testing::kBlocks;

TEST(GreedyFilter, Examples) {
  const std::vector<Pos> a = {1, 2, 3};
  EXPECT_EQ(greedy_filter(a, 2), (std::vector<Pos>{1, 3}));
  const std::vector<Pos> b = {1, 8, 15};
  EXPECT_EQ(greedy_filter(b, 7), b);
  const std::vector<Pos> c = {1, 3, 5};
  EXPECT_EQ(greedy_filter(c, 4), (std::vector<Pos>{1, 5}));
  EXPECT_TRUE(greedy_filter({}, 3).empty());
  const std::vector<Pos> unsorted = {3, 1};
  EXPECT_THROW(greedy_filter(unsorted, 1), Error);
}

TEST(ExtractFromSequence, Examples) {
  const PeriodSequence seq{1, 6, 2};
  auto r = extract_from_sequence(seq, 2, 2, 1, 1, 21);
  EXPECT_EQ(r.starts, (std::vector<Pos>{1, 3, 5}));
  EXPECT_EQ(r.cursor, 7);
  r = extract_from_sequence(seq, 4, 2, 1, 1, 21);
  EXPECT_EQ(r.starts, (std::vector<Pos>{1}));
  EXPECT_EQ(r.cursor, 5);
  r = extract_from_sequence(seq, 2, 2, 2, 2, 5);
  EXPECT_EQ(r.starts, (std::vector<Pos>{3}));
  EXPECT_EQ(r.cursor, 5);
  r = extract_from_sequence(seq, 2, 2, 9, 1, 21);
  EXPECT_TRUE(r.starts.empty());
  EXPECT_EQ(r.cursor, 9);
}

TEST(NOIndex, BuildGroups) {
  const auto ex = NOIndex::build(kBlocks);
  ASSERT_EQ(ex.groups().size(), 2U);
  EXPECT_EQ(ex.groups()[0].pl, 2);
  EXPECT_EQ(ex.groups()[1].pl, 7);
  EXPECT_EQ(ex.group(2)->by_x.size(), 6U);
  EXPECT_EQ(ex.group(7)->by_x.size(), 7U);
  EXPECT_EQ(ex.group(3), nullptr);
  for (const auto& g : ex.groups()) {
    EXPECT_EQ(g.start_grid.size(), g.by_x.size());
    EXPECT_EQ(g.last_grid.size(), g.by_x.size());
    for (const auto& pt : g.last_grid.points()) {
      const auto& seq = ex.sequences()[pt.payload];
      EXPECT_EQ(pt.y, seq.e - seq.pl + 1);
      EXPECT_EQ(pt.x, seq.x);
    }
  }

  const auto unary = NOIndex::build("aaaa");
  ASSERT_EQ(unary.groups().size(), 1U);
  EXPECT_EQ(unary.groups()[0].pl, 1);
  EXPECT_TRUE(NOIndex::build("abc").groups().empty());
}

TEST(NOIndex, FullQueryExamples) {
  const auto ex = NOIndex::build(kBlocks);
  const auto ab = ex.query("ab");
  EXPECT_EQ(ab.starts, (std::vector<Pos>{1, 3, 5, 8, 10, 12, 15, 17, 19}));
  EXPECT_EQ(ab.occ_no(), 9U);
  EXPECT_EQ(ab.stats.pattern.kind, PatternKind::kAperiodic);
  EXPECT_EQ(ex.query("abababc").starts, (std::vector<Pos>{1, 8, 15}));
  const auto periodic = ex.query("ababa");
  EXPECT_EQ(periodic.stats.pattern.kind, PatternKind::kPeriodic);
  EXPECT_EQ(periodic.starts, (std::vector<Pos>{1, 8, 15}));
  EXPECT_EQ(NOIndex::build("aabaaabaabaaabaa").query("aabaaabaa").starts, (std::vector<Pos>{1}));
  EXPECT_EQ(NOIndex::build("aaaa").query("aa").starts, (std::vector<Pos>{1, 3}));
  EXPECT_EQ(NOIndex::build("aaaa").query("aaa").starts, (std::vector<Pos>{1}));
  EXPECT_TRUE(ex.query("zz").starts.empty());
  EXPECT_TRUE(ex.query(std::string(30, 'a')).starts.empty());
  EXPECT_THROW(ex.query(""), Error);
}

TEST(NOIndex, RangeQueryExamples) {
  const auto ex = NOIndex::build(kBlocks);
  EXPECT_EQ(ex.query_range("ab", 2, 13).starts, (std::vector<Pos>{3, 5, 8, 10, 12}));
  EXPECT_EQ(ex.query_range("ab", 2, 5).starts, (std::vector<Pos>{3}));
  EXPECT_EQ(ex.query_range("ab", 3, 4).starts, (std::vector<Pos>{3}));
  EXPECT_EQ(ex.query_range("abababc", 2, 21).starts, (std::vector<Pos>{8, 15}));

  // Periodic variants of the three query cases.
  const auto inside = ex.query_range("babab", 2, 6);
  EXPECT_EQ(inside.starts, (std::vector<Pos>{2}));
  EXPECT_EQ(inside.stats.pattern.kind, PatternKind::kPeriodic);
  EXPECT_EQ(ex.query_range("ababa", 1, 5).starts, (std::vector<Pos>{1}));
  EXPECT_EQ(ex.query_range("ababa", 2, 21).starts, (std::vector<Pos>{8, 15}));
  EXPECT_TRUE(ex.query_range("ababa", 2, 5).starts.empty());

  EXPECT_THROW(ex.query_range("ab", 0, 5), Error);
  EXPECT_THROW(ex.query_range("ab", 5, 4), Error);
  EXPECT_THROW(ex.query_range("ab", 1, 22), Error);
  EXPECT_TRUE(ex.query_range("abab", 5, 6).starts.empty());
}

TEST(NOIndex, Counts) {
  const auto ex = NOIndex::build(kBlocks);
  EXPECT_EQ(ex.count("ab"), 9U);
  EXPECT_EQ(ex.count_range("ab", 2, 13), 5U);
  EXPECT_EQ(ex.count("c"), 3U);
  EXPECT_EQ(ex.count("zzz"), 0U);
  EXPECT_EQ(ex.count("ababa"), 3U);
}

TEST(NOIndex, Stats) {
  const auto stats = NOIndex::build(kBlocks).stats();
  EXPECT_EQ(stats.n, 21);
  ASSERT_TRUE(stats.runs.has_value());
  EXPECT_EQ(*stats.runs, 4U);
  EXPECT_EQ(stats.sequences, 13U);
  EXPECT_EQ(stats.max_degree, 1);
  EXPECT_EQ(stats.max_chain, 1U);
  EXPECT_EQ(stats.groups, 2U);
  EXPECT_GT(stats.estimated_bytes, 0U);
}

TEST(NOIndex, MatchesOracleExhaustivelyOnSmallBinaryTexts) {
  testing::for_each_text("ab", 10, [](const std::string& text) {
    const auto index = NOIndex::build(text);
    const Pos n = index.size();
    for (const auto& pattern : testing::distinct_substrings(text)) {
      ASSERT_EQ(index.query(pattern).starts, oracle::naive_greedy(text, pattern))
          << text << " / " << pattern;
      for (Pos i = 1; i <= n; ++i) {
        for (Pos j = i; j <= n; ++j) {
          ASSERT_EQ(index.query_range(pattern, i, j).starts,
                    oracle::naive_greedy(text, pattern, i, j))
              << text << " / " << pattern << " [" << i << "," << j << "]";
        }
      }
    }
  });
}

TEST(NOIndex, MatchesOracleOnRandomTexts) {
  std::mt19937_64 rng(90210);
  const int sigmas[] = {2, 4, 26};
  for (int trial = 0; trial < 300; ++trial) {
    const int sigma = sigmas[trial % 3];
    const auto text = trial % 2 ? testing::repetitive_text(rng, 1 + rng() % 2000, sigma)
                                : testing::random_text(rng, 1 + rng() % 2000, sigma);
    const auto index = NOIndex::build(text);
    const Pos n = index.size();
    for (int q = 0; q < 5; ++q) {
      const auto pattern = testing::sample_pattern(rng, text, 64, sigma);
      const auto full = index.query(pattern);
      ASSERT_EQ(full.starts, oracle::naive_greedy(text, pattern)) << text << " / " << pattern;
      ASSERT_EQ(index.query_range(pattern, 1, n).starts, full.starts);
      Pos i = 1 + static_cast<Pos>(rng() % n);
      Pos j = 1 + static_cast<Pos>(rng() % n);
      if (i > j) std::swap(i, j);
      const auto ranged = index.query_range(pattern, i, j);
      ASSERT_EQ(ranged.starts, oracle::naive_greedy(text, pattern, i, j))
          << text << " / " << pattern << " [" << i << "," << j << "]";
      for (const auto* r : {&full, &ranged}) {
        if (r->stats.pattern.kind != PatternKind::kPeriodic) continue;
        EXPECT_EQ(r->stats.emissions, r->occ_no());
        EXPECT_LE(r->stats.candidates, r->stats.matched + 2);
      }
    }
  }
}

TEST(NOIndex, AssembleMatchesBuild) {
  const auto built = NOIndex::build(kBlocks);
  auto suffix = SuffixIndex::from_parts(
      std::string(kBlocks), {built.suffix().sa().begin(), built.suffix().sa().end()},
      {built.suffix().lcp_values().begin(), built.suffix().lcp_values().end()});
  auto renaming = RenamingTable::build(suffix);
  std::vector<PeriodSequence> bare;
  for (const auto& seq : built.sequences()) bare.push_back({seq.s, seq.e, seq.pl});
  const auto again = NOIndex::assemble(std::move(suffix), std::move(renaming), bare);
  EXPECT_EQ(again.query("ab").starts, built.query("ab").starts);
  EXPECT_EQ(again.query_range("ababa", 2, 21).starts, built.query_range("ababa", 2, 21).starts);
  EXPECT_EQ(again.stats().max_degree, 1);
  EXPECT_FALSE(again.stats().runs.has_value());
}

}  // namespace
}  // namespace novl
