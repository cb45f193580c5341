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

#ifndef NOVL_ORACLE_HPP
#define NOVL_ORACLE_HPP

// Brute-force references. Nothing here shares code with the index.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace novl::oracle {

struct OracleRun {
  std::int64_t s = 0;
  std::int64_t e = 0;
  std::int64_t p = 0;

  friend bool operator==(const OracleRun&, const OracleRun&) = default;
};

struct OracleReport {
  std::vector<std::int64_t> occurrences;
  std::vector<std::int64_t> greedy;
  std::vector<OracleRun> runs;
};

inline constexpr std::int64_t kNaiveRunsLimit = 5000;

/// All 1-based t with T[t..t+m-1] == P, by direct comparison.
std::vector<std::int64_t> naive_occurrences(std::string_view text, std::string_view pattern);

/// Left-to-right greedy over the occurrences lying fully inside T[i..j].
std::vector<std::int64_t> naive_greedy(std::string_view text, std::string_view pattern);
std::vector<std::int64_t> naive_greedy(std::string_view text, std::string_view pattern,
                                       std::int64_t i, std::int64_t j);

/// Every maximal (s, e) whose smallest period p satisfies 2p <= e - s + 1.
/// Throws std::length_error above kNaiveRunsLimit.
std::vector<OracleRun> naive_runs(std::string_view text);

/// Smallest period by trying every candidate.
std::int64_t naive_period(std::string_view s);

/// Largest pairwise non-overlapping subset, by trying every subset.
/// Intended for at most ~20 occurrences.
std::size_t max_disjoint_subset(std::span<const std::int64_t> occurrences, std::int64_t m);

OracleReport report(std::string_view text, std::string_view pattern);

}  // namespace novl::oracle

#endif  // NOVL_ORACLE_HPP
