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

#include <algorithm>
#include <stdexcept>

namespace novl::oracle {

std::vector<std::int64_t> naive_occurrences(std::string_view text, std::string_view pattern) {
  std::vector<std::int64_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  for (std::size_t t = 0; t + pattern.size() <= text.size(); ++t) {
    if (text.compare(t, pattern.size(), pattern) == 0) {
      out.push_back(static_cast<std::int64_t>(t) + 1);
    }
  }
  return out;
}

std::vector<std::int64_t> naive_greedy(std::string_view text, std::string_view pattern) {
  return naive_greedy(text, pattern, 1, static_cast<std::int64_t>(text.size()));
}

std::vector<std::int64_t> naive_greedy(std::string_view text, std::string_view pattern,
                                       std::int64_t i, std::int64_t j) {
  const auto m = static_cast<std::int64_t>(pattern.size());
  std::vector<std::int64_t> out;
  for (std::int64_t t : naive_occurrences(text, pattern)) {
    if (t < i || t + m - 1 > j) continue;
    if (!out.empty() && t < out.back() + m) continue;
    out.push_back(t);
  }
  return out;
}

std::int64_t naive_period(std::string_view s) {
  const auto m = static_cast<std::int64_t>(s.size());
  for (std::int64_t q = 1; q < m; ++q) {
    bool ok = true;
    for (std::int64_t k = 0; k + q < m && ok; ++k) ok = s[k] == s[k + q];
    if (ok) return q;
  }
  return m;
}

std::vector<OracleRun> naive_runs(std::string_view text) {
  const auto n = static_cast<std::int64_t>(text.size());
  if (n > kNaiveRunsLimit) throw std::length_error("naive_runs: text too long");
  std::vector<OracleRun> runs;
  for (std::int64_t p = 1; 2 * p <= n; ++p) {
    std::int64_t k = 0;
    while (k + p < n) {
      if (text[k] != text[k + p]) {
        ++k;
        continue;
      }
      std::int64_t b = k;
      while (b + 1 + p < n && text[b + 1] == text[b + 1 + p]) ++b;
      // T[k..b+p] has period p and cannot be extended either way.
      const std::int64_t s = k;
      const std::int64_t e = b + p;
      if (e - s + 1 >= 2 * p && naive_period(text.substr(s, e - s + 1)) == p) {
        runs.push_back({s + 1, e + 1, p});
      }
      k = b + 1;
    }
  }
  std::sort(runs.begin(), runs.end(), [](const OracleRun& a, const OracleRun& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.e != b.e) return a.e < b.e;
    return a.p < b.p;
  });
  return runs;
}

std::size_t max_disjoint_subset(std::span<const std::int64_t> occurrences, std::int64_t m) {
  const std::size_t count = occurrences.size();
  if (count > 24) throw std::length_error("max_disjoint_subset: too many occurrences");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << count); ++mask) {
    std::vector<std::int64_t> chosen;
    for (std::size_t b = 0; b < count; ++b) {
      if (mask & (std::uint32_t{1} << b)) chosen.push_back(occurrences[b]);
    }
    bool disjoint = true;
    for (std::size_t a = 0; a < chosen.size() && disjoint; ++a) {
      for (std::size_t b = a + 1; b < chosen.size() && disjoint; ++b) {
        const std::int64_t gap = chosen[a] > chosen[b] ? chosen[a] - chosen[b]
                                                       : chosen[b] - chosen[a];
        disjoint = gap >= m;
      }
    }
    if (disjoint) best = std::max(best, chosen.size());
  }
  return best;
}

OracleReport report(std::string_view text, std::string_view pattern) {
  OracleReport out;
  out.occurrences = naive_occurrences(text, pattern);
  out.greedy = naive_greedy(text, pattern);
  if (static_cast<std::int64_t>(text.size()) <= kNaiveRunsLimit) out.runs = naive_runs(text);
  return out;
}

}  // namespace novl::oracle
