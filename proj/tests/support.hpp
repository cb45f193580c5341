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

#ifndef NOVL_TESTS_SUPPORT_HPP
#define NOVL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "novl/period_analysis.hpp"
#include "novl/suffix_index.hpp"

namespace novl::testing {

inline constexpr const char* kBlocks = "abababcabababcabababc";

/// Calls `f` on every string of length 1..max_len over `alphabet`.
inline void for_each_text(std::string_view alphabet, std::size_t max_len,
                          const std::function<void(const std::string&)>& f) {
  std::string text;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    text.assign(len, alphabet[0]);
    while (true) {
      f(text);
      std::size_t k = 0;
      while (k < len && ++digits[k] == alphabet.size()) {
        digits[k] = 0;
        text[k] = alphabet[0];
        ++k;
      }
      if (k == len) break;
      text[k] = alphabet[digits[k]];
    }
  }
}

inline std::vector<std::string> distinct_substrings(const std::string& text) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < text.size(); ++i) {
    for (std::size_t len = 1; i + len <= text.size(); ++len) seen.insert(text.substr(i, len));
  }
  return {seen.begin(), seen.end()};
}

inline std::string random_text(std::mt19937_64& rng, std::size_t n, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string text(n, 'a');
  for (auto& c : text) c = static_cast<char>('a' + pick(rng));
  return text;
}

/// Concatenated powers of short random blocks with sparse mutations; rich in
/// runs of several periods, including nested ones.
inline std::string repetitive_text(std::mt19937_64& rng, std::size_t n, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string text;
  while (text.size() < n) {
    const std::size_t block_len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::string block(block_len, 'a');
    for (auto& c : block) c = static_cast<char>('a' + pick(rng));
    const std::size_t reps = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    for (std::size_t r = 0; r < reps; ++r) text += block;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0 && text.size() > 8) {
      // Repeat a recent stretch to create a period made of periods.
      const std::size_t len = std::uniform_int_distribution<std::size_t>(2, text.size() / 2)(rng);
      const std::string tail = text.substr(text.size() - len);
      text += tail;
      text += tail;
    }
  }
  text.resize(n);
  for (std::size_t k = 0; k < n / 40; ++k) {
    text[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] =
        static_cast<char>('a' + pick(rng));
  }
  return text;
}

inline std::string fibonacci_word(std::size_t min_len) {
  std::string prev = "b";
  std::string cur = "a";
  while (cur.size() < min_len) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Random pattern: usually a substring, sometimes one byte mutated.
inline std::string sample_pattern(std::mt19937_64& rng, const std::string& text,
                                  std::size_t max_len, int sigma) {
  const std::size_t cap = std::min(max_len, text.size());
  const std::size_t len = std::uniform_int_distribution<std::size_t>(1, cap)(rng);
  const std::size_t start = std::uniform_int_distribution<std::size_t>(0, text.size() - len)(rng);
  std::string pattern = text.substr(start, len);
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
    pattern[at] = static_cast<char>('a' + std::uniform_int_distribution<int>(0, sigma)(rng));
  }
  return pattern;
}

inline std::int64_t floor_log2(std::int64_t n) {
  std::int64_t k = 0;
  while ((std::int64_t{1} << (k + 1)) <= n) ++k;
  return k;
}

struct PeriodPathCheck {
  bool unique_period_child = true;   // no period node has two period-node children
  bool periods_double = true;        // consecutive paths on a root path: p2 >= 2 p1
  bool paths_bounded = true;         // paths on one root path <= log2 n
  std::size_t max_paths_on_root_path = 0;
  std::string detail;

  bool ok() const { return unique_period_child && periods_double && paths_bounded; }
};

/// Checks the period-path structure of `index` against the expected structure of period
/// nodes and period paths, over every position of the suffix trie.
inline PeriodPathCheck check_period_paths(const SuffixIndex& index) {
  PeriodPathCheck check;
  const auto report = period_paths(index);
  const auto nodes = index.nodes();
  const double log_n = std::log2(static_cast<double>(index.size()));

  // Positions inside an edge have one child; only branching nodes can
  // have several.
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto& edge = report.edge_paths[id];
    if (edge.empty() || edge.back() < 0) continue;
    std::size_t period_children = 0;
    for (auto child : index.children(static_cast<std::int32_t>(id))) {
      const auto& below = report.edge_paths[child];
      if (!below.empty() && below.front() >= 0) ++period_children;
    }
    if (period_children > 1) {
      check.unique_period_child = false;
      check.detail = "node '" + std::string(index.label(static_cast<std::int32_t>(id))) +
                     "' has several period-node children";
    }
  }

  // Walk every root-to-leaf path; parents have larger ids than children.
  struct State {
    std::size_t paths = 0;
    Pos last_period = 0;
    std::int32_t last_path = -1;
  };
  std::vector<State> state(nodes.size());
  for (auto id = static_cast<std::int32_t>(nodes.size()) - 1; id >= 0; --id) {
    State s = nodes[id].parent >= 0 ? state[nodes[id].parent] : State{};
    const auto& edge = report.edge_paths[id];
    for (std::size_t k = 0; k < edge.size(); ++k) {
      const auto path = edge[k];
      if (path < 0 || path == s.last_path) continue;
      const Pos period = report.paths[path].period;
      if (s.last_path >= 0 && period < 2 * s.last_period) {
        check.periods_double = false;
        const auto& first = report.paths[path].positions.front();
        check.detail = "period " + std::to_string(period) + " follows " +
                       std::to_string(s.last_period) + " at '" +
                       std::string(index.label(first.node).substr(0, first.depth)) + "'";
      }
      ++s.paths;
      s.last_period = period;
      s.last_path = path;
    }
    state[id] = s;
    check.max_paths_on_root_path = std::max(check.max_paths_on_root_path, s.paths);
    if (static_cast<double>(s.paths) > log_n) check.paths_bounded = false;
  }
  return check;
}

}  // namespace novl::testing

#endif  // NOVL_TESTS_SUPPORT_HPP
