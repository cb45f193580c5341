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

#include "novl/oracle.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "support.hpp"

namespace novl::oracle {
namespace {

using V = std::vector<std::int64_t>;

TEST(Oracle, NaiveOccurrences) {
  EXPECT_EQ(naive_occurrences(testing::kBlocks, "ab"), (V{1, 3, 5, 8, 10, 12, 15, 17, 19}));
  EXPECT_EQ(naive_occurrences("aaaa", "aa"), (V{1, 2, 3}));
  EXPECT_TRUE(naive_occurrences("abc", "d").empty());
  EXPECT_TRUE(naive_occurrences("ab", "abc").empty());
}

TEST(Oracle, NaiveGreedy) {
  EXPECT_EQ(naive_greedy("aaaa", "aa"), (V{1, 3}));
  EXPECT_EQ(naive_greedy(testing::kBlocks, "ab", 2, 5), (V{3}));
  EXPECT_EQ(naive_greedy("aabaaabaabaaabaa", "aabaaabaa"), (V{1}));
  EXPECT_EQ(naive_greedy("aaaa", "aa", 2, 4), (V{2}));
  EXPECT_TRUE(naive_greedy("aaaa", "aa", 4, 4).empty());
}

TEST(Oracle, NaiveRuns) {
  EXPECT_EQ(naive_runs(testing::kBlocks),
            (std::vector<OracleRun>{{1, 6, 2}, {1, 21, 7}, {8, 13, 2}, {15, 20, 2}}));
  EXPECT_EQ(naive_runs("aaaa"), (std::vector<OracleRun>{{1, 4, 1}}));
  const auto runs = naive_runs("aabaaabaabaaabaa");
  EXPECT_NE(std::find(runs.begin(), runs.end(), OracleRun{1, 9, 4}), runs.end());
  EXPECT_NE(std::find(runs.begin(), runs.end(), OracleRun{8, 16, 4}), runs.end());
  EXPECT_THROW(naive_runs(std::string(kNaiveRunsLimit + 1, 'a')), std::length_error);
}

TEST(Oracle, NaivePeriod) {
  EXPECT_EQ(naive_period("abababc"), 7);
  EXPECT_EQ(naive_period("ababab"), 2);
  EXPECT_EQ(naive_period("aabaaabaa"), 4);
}

TEST(Oracle, Report) {
  const auto r = report("aaaa", "aa");
  EXPECT_EQ(r.occurrences, (V{1, 2, 3}));
  EXPECT_EQ(r.greedy, (V{1, 3}));
  EXPECT_EQ(r.runs, (std::vector<OracleRun>{{1, 4, 1}}));
}

TEST(Oracle, GreedyHasMaximumCardinality) {
  testing::for_each_text("ab", 12, [](const std::string& text) {
    for (const auto& pattern : testing::distinct_substrings(text)) {
      const auto occ = naive_occurrences(text, pattern);
      if (occ.size() > 12) continue;
      const auto greedy = naive_greedy(text, pattern);
      ASSERT_EQ(greedy.size(),
                max_disjoint_subset(occ, static_cast<std::int64_t>(pattern.size())))
          << text << " / " << pattern;
    }
  });
}

TEST(Oracle, GreedyIsMaximal) {
  testing::for_each_text("ab", 10, [](const std::string& text) {
    for (const auto& pattern : testing::distinct_substrings(text)) {
      const auto m = static_cast<std::int64_t>(pattern.size());
      const auto greedy = naive_greedy(text, pattern);
      for (auto t : naive_occurrences(text, pattern)) {
        bool blocked = false;
        for (auto g : greedy) blocked = blocked || (t < g + m && g < t + m);
        ASSERT_TRUE(blocked) << text << " / " << pattern << " at " << t;
      }
    }
  });
}

}  // namespace
}  // namespace novl::oracle
