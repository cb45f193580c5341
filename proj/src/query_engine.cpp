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

#include <algorithm>
#include <bit>
#include <utility>

namespace novl {

std::vector<Pos> greedy_filter(std::span<const Pos> starts, Pos m) {
  std::vector<Pos> kept;
  Pos next_free = 0;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    if (k > 0 && starts[k] < starts[k - 1]) throw Error("greedy_filter: unsorted input");
    if (kept.empty() || starts[k] >= next_free) {
      kept.push_back(starts[k]);
      next_free = starts[k] + m;
    }
  }
  return kept;
}

Extraction extract_from_sequence(const PeriodSequence& seq, Pos m, Pos p, Pos cursor, Pos lo,
                                 Pos hi) {
  Extraction out;
  out.cursor = extract_from_sequence(seq, m, p, cursor, lo, hi,
                                     [&](Pos t) { out.starts.push_back(t); });
  return out;
}

NOIndex NOIndex::build(std::string text) {
  auto suffix = SuffixIndex::build(std::move(text));
  auto renaming = RenamingTable::build(suffix);
  NOIndex index(std::move(suffix), std::move(renaming));
  const auto runs = find_runs(index.suffix_.text());
  index.run_count_ = runs.size();
  index.sequences_ = phase_sequences(runs, index.suffix_);
  index.build_derived();
  return index;
}

NOIndex NOIndex::assemble(SuffixIndex suffix, RenamingTable renaming,
                          std::vector<PeriodSequence> sequences) {
  NOIndex index(std::move(suffix), std::move(renaming));
  const Pos n = index.size();
  for (auto& seq : sequences) {
    if (seq.pl < 1 || seq.s < 1 || seq.e > n || seq.e - seq.s + 1 < 2 * seq.pl + 1) {
      throw Error("invalid period sequence");
    }
    seq.x = index.suffix_.rank_of(seq.s);
    seq.run = -1;
  }
  std::sort(sequences.begin(), sequences.end(),
            [](const PeriodSequence& a, const PeriodSequence& b) {
              return a.s != b.s ? a.s < b.s : a.pl < b.pl;
            });
  compute_degrees(sequences);
  index.sequences_ = std::move(sequences);
  index.build_derived();
  return index;
}

void NOIndex::build_derived() {
  const Pos n = size();
  std::vector<std::int32_t> ids(sequences_.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<std::int32_t>(k);
  std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
    const auto& sa = sequences_[a];
    const auto& sb = sequences_[b];
    return sa.pl != sb.pl ? sa.pl < sb.pl : sa.x < sb.x;
  });

  groups_.clear();
  for (std::size_t begin = 0; begin < ids.size();) {
    std::size_t end = begin;
    const Pos pl = sequences_[ids[begin]].pl;
    while (end < ids.size() && sequences_[ids[end]].pl == pl) ++end;

    GroupIndex group;
    group.pl = pl;
    group.by_x.assign(ids.begin() + static_cast<std::ptrdiff_t>(begin),
                      ids.begin() + static_cast<std::ptrdiff_t>(end));
    std::vector<GridPoint> starts;
    std::vector<GridPoint> lasts;
    for (auto id : group.by_x) {
      const auto& seq = sequences_[id];
      const auto payload = static_cast<std::uint64_t>(id);
      starts.push_back({seq.x, seq.s, payload});
      lasts.push_back({seq.x, seq.e - pl + 1, payload});
    }
    group.start_grid = Grid::build(std::move(starts), n);
    group.last_grid = Grid::build(std::move(lasts), n);
    groups_.push_back(std::move(group));
    begin = end;
  }

  std::vector<GridPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (Pos y = 1; y <= n; ++y) {
    points.push_back({suffix_.rank_of(y), y, static_cast<std::uint64_t>(y)});
  }
  suffix_grid_ = Grid::build(std::move(points), n);
}

const GroupIndex* NOIndex::group(Pos pl) const {
  const auto it = std::lower_bound(groups_.begin(), groups_.end(), pl,
                                   [](const GroupIndex& g, Pos value) { return g.pl < value; });
  return it != groups_.end() && it->pl == pl ? &*it : nullptr;
}

// Visits candidate sequences in text order with one greedy cursor. Runs of
// the same period overlap by less than one period, so text order of the
// sequences is text order of their occurrences.
template <typename Sink>
void NOIndex::extract_all(std::vector<std::int32_t>& ids, Pos m, Pos p, Pos lo, Pos hi,
                          QueryStats& stats, Sink& sink) const {
  std::sort(ids.begin(), ids.end(), [&](std::int32_t a, std::int32_t b) {
    return sequences_[a].s < sequences_[b].s;
  });
  Pos cursor = lo;
  for (auto id : ids) {
    const PeriodSequence& seq = sequences_[id];
    ++stats.candidates;
    Pos first = seq.s;
    if (lo > first) first += (lo - first + p - 1) / p * p;
    if (first + m - 1 <= std::min(seq.e, hi)) ++stats.matched;
    cursor = extract_from_sequence(seq, m, p, cursor, lo, hi, [&](Pos t) {
      ++stats.emissions;
      sink(t);
    });
  }
}

template <typename Sink>
QueryStats NOIndex::run_full(std::string_view pattern, Sink&& sink) const {
  QueryStats stats;
  const auto locus = suffix_.locate(pattern, &stats.locate_work);
  stats.pattern = classify(pattern);
  if (!locus) return stats;
  const Pos m = stats.pattern.m;

  if (stats.pattern.kind == PatternKind::kAperiodic) {
    const auto sorted = report_sorted(suffix_, renaming_, *locus, &stats.sort);
    stats.occurrences = sorted.size();
    Pos next_free = 0;
    for (Pos t : sorted) {
      if (t < next_free) continue;
      sink(t);
      next_free = t + m;
    }
    return stats;
  }

  const GroupIndex* g = group(stats.pattern.p);
  if (g == nullptr) return stats;
  const auto first = std::lower_bound(g->by_x.begin(), g->by_x.end(), locus->l,
                                      [&](std::int32_t id, Pos x) { return sequences_[id].x < x; });
  std::vector<std::int32_t> ids;
  for (auto it = first; it != g->by_x.end() && sequences_[*it].x <= locus->r; ++it) {
    ids.push_back(*it);
  }
  extract_all(ids, m, stats.pattern.p, 1, size(), stats, sink);
  return stats;
}

template <typename Sink>
QueryStats NOIndex::run_range(std::string_view pattern, Pos i, Pos j, Sink&& sink) const {
  if (i < 1 || j > size() || i > j) throw Error("bad range");
  QueryStats stats;
  const auto locus = suffix_.locate(pattern, &stats.locate_work);
  stats.pattern = classify(pattern);
  const Pos m = stats.pattern.m;
  if (!locus || j - i + 1 < m) return stats;

  if (stats.pattern.kind == PatternKind::kAperiodic) {
    const auto hits = suffix_grid_.report(locus->l, locus->r, i, j - m + 1, &stats.grid_work);
    stats.occurrences = hits.size();
    Pos next_free = 0;
    for (const auto& hit : hits) {
      if (hit.y < next_free) continue;
      sink(hit.y);
      next_free = hit.y + m;
    }
    return stats;
  }

  const GroupIndex* g = group(stats.pattern.p);
  if (g == nullptr) return stats;
  std::vector<std::int32_t> ids;
  for (const auto& hit : g->start_grid.report(locus->l, locus->r, i, j - m + 1, &stats.grid_work)) {
    ids.push_back(static_cast<std::int32_t>(hit.payload));
    ++stats.query_hits[0];
  }
  for (const auto& hit : g->last_grid.report(locus->l, locus->r, i, j, &stats.grid_work)) {
    ids.push_back(static_cast<std::int32_t>(hit.payload));
    ++stats.query_hits[1];
  }
  if (const auto before = g->start_grid.predecessor(locus->l, locus->r, i, &stats.grid_work)) {
    ids.push_back(static_cast<std::int32_t>(before->payload));
    ++stats.query_hits[2];
  }
  std::sort(ids.begin(), ids.end());
  const auto unique_end = std::unique(ids.begin(), ids.end());
  stats.duplicates = static_cast<std::size_t>(ids.end() - unique_end);
  ids.erase(unique_end, ids.end());
  extract_all(ids, m, stats.pattern.p, i, j, stats, sink);
  return stats;
}

QueryResult NOIndex::query(std::string_view pattern) const {
  QueryResult result;
  result.stats = run_full(pattern, [&](Pos t) { result.starts.push_back(t); });
  return result;
}

QueryResult NOIndex::query_range(std::string_view pattern, Pos i, Pos j) const {
  QueryResult result;
  result.stats = run_range(pattern, i, j, [&](Pos t) { result.starts.push_back(t); });
  return result;
}

std::size_t NOIndex::count(std::string_view pattern) const {
  std::size_t total = 0;
  run_full(pattern, [&](Pos) { ++total; });
  return total;
}

std::size_t NOIndex::count_range(std::string_view pattern, Pos i, Pos j) const {
  std::size_t total = 0;
  run_range(pattern, i, j, [&](Pos) { ++total; });
  return total;
}

IndexStats NOIndex::stats() const {
  IndexStats out;
  out.n = size();
  out.runs = run_count_;
  out.sequences = sequences_.size();
  out.levels = renaming_.levels();
  out.groups = groups_.size();
  for (std::size_t k = 0; k < sequences_.size(); ++k) {
    out.max_degree = std::max(out.max_degree, sequences_[k].degree);
    std::size_t chain = 0;
    for (auto cur = sequences_[k].inner; cur >= 0; cur = sequences_[cur].inner) ++chain;
    out.max_chain = std::max(out.max_chain, chain);
  }

  const auto n = static_cast<std::size_t>(out.n);
  std::size_t bytes = n;                       // text
  bytes += 3 * n * sizeof(Pos);                // sa, inv_sa, lcp
  bytes += suffix_.nodes().size() * sizeof(TreeNode);
  bytes += renaming_.rank_words() * sizeof(std::uint32_t);
  bytes += renaming_.levels() * suffix_.nodes().size() * sizeof(std::int32_t);
  bytes += sequences_.size() * sizeof(PeriodSequence);
  auto grid_bytes = [](const Grid& grid) {
    const std::size_t bits_per_point = static_cast<std::size_t>(
        std::bit_width(static_cast<std::uint64_t>(std::max<Pos>(grid.side() - 1, 1))));
    return grid.size() * (sizeof(GridPoint) + sizeof(Pos)) + grid.size() * bits_per_point / 4;
  };
  bytes += grid_bytes(suffix_grid_);
  for (const auto& g : groups_) {
    bytes += g.by_x.size() * sizeof(std::int32_t) + grid_bytes(g.start_grid) +
             grid_bytes(g.last_grid);
  }
  out.estimated_bytes = bytes;
  return out;
}

}  // namespace novl
