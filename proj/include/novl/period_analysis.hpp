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

#ifndef NOVL_PERIOD_ANALYSIS_HPP
#define NOVL_PERIOD_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "novl/suffix_index.hpp"

namespace novl {

/// Smallest p >= 1 with s[i] == s[i + p] for all valid i (KMP border).
Pos shortest_period(std::string_view s);

enum class PatternKind { kAperiodic, kPeriodic };

/// A pattern is periodic when three pairwise-overlapping copies of it can
/// exist, i.e. m > 2p for its shortest period p.
struct PatternClass {
  Pos m = 0;
  Pos p = 0;
  PatternKind kind = PatternKind::kAperiodic;
};

PatternClass classify(std::string_view pattern);

/// Maximal repetition T[s..e] (1-based, inclusive) with shortest period p and
/// e - s + 1 >= 2p.
struct Run {
  Pos s = 0;
  Pos e = 0;
  Pos p = 0;

  Pos length() const { return e - s + 1; }
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// All runs of `text`, sorted by (s, e, p). O(n log n) LCE probes.
std::vector<Run> find_runs(std::string_view text);

/// One phase of a run: starts at some s inside the run's first period,
/// extends to the run end, and is longer than two periods.
struct PeriodSequence {
  Pos s = 0;
  Pos e = 0;
  Pos pl = 0;
  Pos x = 0;  // lexicographic rank of the suffix at s
  std::int32_t degree = 0;
  std::int32_t inner = -1;  // same start, next smaller period; -1 if none
  std::int32_t run = -1;    // index of the generating run

  friend bool operator==(const PeriodSequence&, const PeriodSequence&) = default;
};

/// Expands every run (s, e, p) into phases (s + j, e, p), 0 <= j < p, that
/// keep length >= 2p + 1. Output is sorted by (s, pl) with x, degree and
/// inner filled in.
std::vector<PeriodSequence> phase_sequences(std::span<const Run> runs,
                                            const SuffixIndex& index);

/// Recomputes `degree` and `inner` for a (s, pl)-sorted sequence list. A
/// sequence's degree counts nesting of sequences with strictly smaller
/// period; phases of the same run do not nest into each other.
void compute_degrees(std::vector<PeriodSequence>& sequences);

/// Follows inner links from `seq` to the sequence of period `p` with the same
/// start. Returns nullopt when the chain skips past p or ends.
std::optional<std::int32_t> descend_chain(std::span<const PeriodSequence> sequences,
                                          std::int32_t seq, Pos m, Pos p,
                                          std::size_t* steps = nullptr);

/// Descent with the loop guard "period length greater than m" taken
/// literally. Kept for comparison with descend_chain.
std::int32_t descend_by_length(std::span<const PeriodSequence> sequences, std::int32_t seq,
                               Pos m);

/// A point of the suffix trie: the prefix of label(node) of length `depth`,
/// lying on the edge into `node` (parent depth < depth <= node depth).
struct TriePosition {
  std::int32_t node = -1;
  Pos depth = 0;
  friend bool operator==(const TriePosition&, const TriePosition&) = default;
};

struct PeriodPath {
  Pos period = 0;
  std::vector<TriePosition> positions;  // top-down
};

struct PeriodPathReport {
  std::vector<PeriodPath> paths;
  /// Per tree node, per position on its incoming edge (index depth minus
  /// parent depth minus one): index into `paths`, or -1. Sentinel-only
  /// leaves have no positions.
  std::vector<std::vector<std::int32_t>> edge_paths;

  std::int32_t path_at(TriePosition at, const SuffixIndex& index) const;
};

inline constexpr Pos kPeriodPathLimit = 4096;

/// Enumerates period nodes (trie positions whose string has m > 2p) and
/// groups them into maximal parent-child chains sharing one period. Throws
/// above kPeriodPathLimit.
PeriodPathReport period_paths(const SuffixIndex& index);

}  // namespace novl

#endif  // NOVL_PERIOD_ANALYSIS_HPP
