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

#ifndef NOVL_QUERY_ENGINE_HPP
#define NOVL_QUERY_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "novl/occurrence_sorter.hpp"
#include "novl/period_analysis.hpp"
#include "novl/range_report.hpp"
#include "novl/suffix_index.hpp"

namespace novl {

/// Period sequences of one period length, in three views.
struct GroupIndex {
  Pos pl = 0;
  std::vector<std::int32_t> by_x;  // sequence ids, ascending x
  Grid start_grid;                 // (x, s, id)
  Grid last_grid;                  // (x, e - pl + 1, id)
};

struct QueryStats {
  PatternClass pattern;
  std::size_t locate_work = 0;
  SortStats sort;               // aperiodic full-text path
  std::size_t grid_work = 0;
  std::size_t occurrences = 0;  // candidate occurrences before filtering (aperiodic)
  std::size_t query_hits[3] = {0, 0, 0};
  std::size_t duplicates = 0;
  std::size_t candidates = 0;   // distinct sequences visited (periodic)
  std::size_t matched = 0;      // visited sequences with an occurrence in the window
  std::size_t emissions = 0;
};

struct QueryResult {
  std::vector<Pos> starts;
  QueryStats stats;

  std::size_t occ_no() const { return starts.size(); }
};

struct IndexStats {
  Pos n = 0;
  std::optional<std::size_t> runs;  // unknown for indexes loaded from disk
  std::size_t sequences = 0;
  std::int32_t max_degree = 0;
  std::size_t max_chain = 0;
  std::size_t levels = 0;
  std::size_t groups = 0;
  std::size_t estimated_bytes = 0;
};

/// Keeps t when t >= last kept + m. Throws Error on unsorted input.
std::vector<Pos> greedy_filter(std::span<const Pos> starts, Pos m);

/// Emits s + k*p for increasing k, starting at the first value not below
/// max(cursor, lo), while the occurrence fits in [.., min(e, hi)]. Each
/// emission moves the cursor to t + m. Returns the final cursor.
template <typename Emit>
Pos extract_from_sequence(const PeriodSequence& seq, Pos m, Pos p, Pos cursor, Pos lo, Pos hi,
                          Emit&& emit) {
  const Pos first = std::max(cursor, lo);
  Pos t = seq.s;
  if (first > t) t += (first - t + p - 1) / p * p;
  const Pos last = std::min(seq.e, hi) - m + 1;
  const Pos step = (m + p - 1) / p * p;
  for (; t <= last; t += step) {
    emit(t);
    cursor = t + m;
  }
  return cursor;
}

struct Extraction {
  std::vector<Pos> starts;
  Pos cursor = 0;
};

Extraction extract_from_sequence(const PeriodSequence& seq, Pos m, Pos p, Pos cursor, Pos lo,
                                 Pos hi);

/// Non-overlapping occurrence index over one text.
class NOIndex {
 public:
  static NOIndex build(std::string text);

  /// Rebuilds derived structures from stored parts. `sequences` needs only
  /// s, e and pl; everything else is recomputed.
  static NOIndex assemble(SuffixIndex suffix, RenamingTable renaming,
                          std::vector<PeriodSequence> sequences);

  const SuffixIndex& suffix() const { return suffix_; }
  const RenamingTable& renaming() const { return renaming_; }
  std::span<const PeriodSequence> sequences() const { return sequences_; }
  std::span<const GroupIndex> groups() const { return groups_; }
  const GroupIndex* group(Pos pl) const;
  const Grid& suffix_grid() const { return suffix_grid_; }
  Pos size() const { return suffix_.size(); }

  /// Greedy left-to-right maximal set of non-overlapping occurrences.
  QueryResult query(std::string_view pattern) const;
  /// Same, restricted to occurrences lying fully inside T[i..j].
  /// Throws Error("bad range") unless 1 <= i <= j <= n.
  QueryResult query_range(std::string_view pattern, Pos i, Pos j) const;

  std::size_t count(std::string_view pattern) const;
  std::size_t count_range(std::string_view pattern, Pos i, Pos j) const;

  IndexStats stats() const;

 private:
  template <typename Sink>
  QueryStats run_full(std::string_view pattern, Sink&& sink) const;
  template <typename Sink>
  QueryStats run_range(std::string_view pattern, Pos i, Pos j, Sink&& sink) const;
  template <typename Sink>
  void extract_all(std::vector<std::int32_t>& ids, Pos m, Pos p, Pos lo, Pos hi,
                   QueryStats& stats, Sink& sink) const;

  NOIndex(SuffixIndex suffix, RenamingTable renaming)
      : suffix_(std::move(suffix)), renaming_(std::move(renaming)) {}
  void build_derived();

  SuffixIndex suffix_;
  RenamingTable renaming_;
  std::vector<PeriodSequence> sequences_;
  std::vector<GroupIndex> groups_;
  Grid suffix_grid_;
  std::optional<std::size_t> run_count_;
};

}  // namespace novl

#endif  // NOVL_QUERY_ENGINE_HPP
