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

#include "novl/period_analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace novl {
namespace {

// Longest common extension via rank + sparse-table minimum over the LCP array.
class Lce {
 public:
  explicit Lce(std::string_view text) : n_(static_cast<Pos>(text.size())) {
    const auto sa = suffix_sort(text);
    const auto lcp = lcp_array(text, sa);
    rank_.resize(n_);
    for (Pos x = 0; x < n_; ++x) rank_[sa[x]] = static_cast<std::uint32_t>(x);

    const int levels = n_ > 1 ? std::bit_width(static_cast<std::uint64_t>(n_)) : 1;
    table_.resize(levels);
    table_[0].assign(lcp.begin(), lcp.end());
    for (int k = 1; k < levels; ++k) {
      const Pos span = Pos{1} << k;
      const Pos half = span >> 1;
      auto& row = table_[k];
      const auto& prev = table_[k - 1];
      row.resize(n_ - span + 1);
      for (Pos i = 0; i + span <= n_; ++i) row[i] = std::min(prev[i], prev[i + half]);
    }
  }

  // Length of the longest common prefix of the suffixes at i and j (0-based).
  Pos operator()(Pos i, Pos j) const {
    if (i == j) return n_ - i;
    auto lo = rank_[i];
    auto hi = rank_[j];
    if (lo > hi) std::swap(lo, hi);
    ++lo;
    const int k = std::bit_width(static_cast<std::uint64_t>(hi - lo + 1)) - 1;
    return std::min(table_[k][lo], table_[k][hi - (std::uint32_t{1} << k) + 1]);
  }

 private:
  Pos n_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::vector<std::uint32_t>> table_;
};

std::vector<Pos> prime_factors(Pos value, const std::vector<Pos>& smallest_factor) {
  std::vector<Pos> primes;
  while (value > 1) {
    const Pos q = smallest_factor[value];
    if (primes.empty() || primes.back() != q) primes.push_back(q);
    value /= q;
  }
  return primes;
}

// Fenwick tree over positions answering max over a suffix [s, n].
class SuffixMax {
 public:
  explicit SuffixMax(Pos n) : n_(n), tree_(n + 1, 0) {}

  void raise(Pos s, std::int32_t value) {
    for (Pos i = n_ - s + 1; i <= n_; i += i & -i) tree_[i] = std::max(tree_[i], value);
  }

  std::int32_t query(Pos s) const {
    std::int32_t best = 0;
    for (Pos i = n_ - s + 1; i > 0; i -= i & -i) best = std::max(best, tree_[i]);
    return best;
  }

 private:
  Pos n_;
  std::vector<std::int32_t> tree_;
};

}  // namespace

Pos shortest_period(std::string_view s) {
  const auto m = static_cast<Pos>(s.size());
  if (m == 0) return 0;
  std::vector<Pos> border(m, 0);
  Pos k = 0;
  for (Pos i = 1; i < m; ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return m - border[m - 1];
}

PatternClass classify(std::string_view pattern) {
  PatternClass result;
  result.m = static_cast<Pos>(pattern.size());
  result.p = shortest_period(pattern);
  result.kind = result.m > 2 * result.p ? PatternKind::kPeriodic : PatternKind::kAperiodic;
  return result;
}

std::vector<Run> find_runs(std::string_view text) {
  const auto n = static_cast<Pos>(text.size());
  std::vector<Run> runs;
  if (n < 2) return runs;

  const Lce forward(text);
  const std::string reversed(text.rbegin(), text.rend());
  const Lce backward(reversed);
  auto common_suffix = [&](Pos i, Pos j) { return backward(n - 1 - i, n - 1 - j); };

  std::vector<Pos> smallest_factor(n / 2 + 1, 0);
  for (Pos i = 2; i <= n / 2; ++i) {
    if (smallest_factor[i] != 0) continue;
    for (Pos j = i; j <= n / 2; j += i) {
      if (smallest_factor[j] == 0) smallest_factor[j] = i;
    }
  }

  // Every run of period p contains two consecutive multiples of p, so
  // probing T[i] vs T[i+p] at i = 0, p, 2p, ... finds each one.
  for (Pos p = 1; 2 * p <= n; ++p) {
    const auto primes = prime_factors(p, smallest_factor);
    Pos covered = -2;  // last index k of the current region with T[k] == T[k+p]
    for (Pos i = 0; i + p < n; i += p) {
      if (covered >= i - 1) continue;
      const Pos ahead = text[i] == text[i + p] ? forward(i, i + p) : 0;
      const Pos behind =
          i > 0 && text[i - 1] == text[i + p - 1] ? common_suffix(i - 1, i + p - 1) : 0;
      if (ahead + behind < p) continue;
      const Pos start = i - behind;
      const Pos end = i + ahead - 1 + p;
      covered = i + ahead - 1;
      const Pos length = end - start + 1;
      const bool smaller = std::any_of(primes.begin(), primes.end(), [&](Pos q) {
        const Pos d = p / q;
        return forward(start, start + d) >= length - d;
      });
      if (!smaller) runs.push_back({start + 1, end + 1, p});
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::vector<PeriodSequence> phase_sequences(std::span<const Run> runs,
                                            const SuffixIndex& index) {
  std::vector<PeriodSequence> sequences;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    for (Pos j = 0; j < run.p; ++j) {
      const Pos s = run.s + j;
      if (run.e - s + 1 < 2 * run.p + 1) break;
      PeriodSequence seq;
      seq.s = s;
      seq.e = run.e;
      seq.pl = run.p;
      seq.x = index.rank_of(s);
      seq.run = static_cast<std::int32_t>(r);
      sequences.push_back(seq);
    }
  }
  std::sort(sequences.begin(), sequences.end(),
            [](const PeriodSequence& a, const PeriodSequence& b) {
              return a.s != b.s ? a.s < b.s : a.pl < b.pl;
            });
  compute_degrees(sequences);
  return sequences;
}

void compute_degrees(std::vector<PeriodSequence>& sequences) {
  Pos n = 0;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    auto& seq = sequences[i];
    n = std::max(n, seq.e);
    seq.inner = -1;
    seq.degree = 0;
    if (i > 0 && sequences[i - 1].s == seq.s) seq.inner = static_cast<std::int32_t>(i - 1);
  }
  if (sequences.empty()) return;

  // Process runs by (end, period). Everything nested in a sequence then has
  // been inserted already, except phases of its own run, which are batched.
  std::vector<std::int32_t> order(sequences.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const auto& sa = sequences[a];
    const auto& sb = sequences[b];
    if (sa.e != sb.e) return sa.e < sb.e;
    if (sa.pl != sb.pl) return sa.pl < sb.pl;
    return sa.s < sb.s;
  });

  SuffixMax nested(n);
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin;
    const auto& head = sequences[order[begin]];
    while (end < order.size() && sequences[order[end]].e == head.e &&
           sequences[order[end]].pl == head.pl) {
      ++end;
    }
    for (std::size_t k = begin; k < end; ++k) {
      auto& seq = sequences[order[k]];
      seq.degree = nested.query(seq.s);
    }
    for (std::size_t k = begin; k < end; ++k) {
      const auto& seq = sequences[order[k]];
      nested.raise(seq.s, seq.degree + 1);
    }
    begin = end;
  }
}

std::optional<std::int32_t> descend_chain(std::span<const PeriodSequence> sequences,
                                          std::int32_t seq, Pos m, Pos p,
                                          std::size_t* steps) {
  (void)m;
  std::size_t taken = 0;
  std::optional<std::int32_t> found;
  for (std::int32_t cur = seq; cur >= 0; cur = sequences[cur].inner) {
    if (sequences[cur].pl == p) {
      found = cur;
      break;
    }
    if (sequences[cur].pl < p) break;
    ++taken;
  }
  if (steps != nullptr) *steps += taken;
  return found;
}

std::int32_t descend_by_length(std::span<const PeriodSequence> sequences, std::int32_t seq,
                               Pos m) {
  std::int32_t cur = seq;
  while (sequences[cur].pl > m && sequences[cur].inner >= 0) cur = sequences[cur].inner;
  return cur;
}

namespace {

// Shortest period of every prefix of s: entry d-1 holds the period of s[0, d).
std::vector<Pos> prefix_periods(std::string_view s) {
  const auto m = static_cast<Pos>(s.size());
  std::vector<Pos> border(m, 0);
  std::vector<Pos> period(m, 1);
  Pos k = 0;
  for (Pos i = 1; i < m; ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
    period[i] = i + 1 - k;
  }
  return period;
}

}  // namespace

std::int32_t PeriodPathReport::path_at(TriePosition at, const SuffixIndex& index) const {
  const auto& node = index.nodes()[at.node];
  const Pos top = node.parent >= 0 ? index.nodes()[node.parent].depth : 0;
  const auto& edge = edge_paths[at.node];
  const Pos offset = at.depth - top - 1;
  if (offset < 0 || offset >= static_cast<Pos>(edge.size())) return -1;
  return edge[offset];
}

PeriodPathReport period_paths(const SuffixIndex& index) {
  if (index.size() > kPeriodPathLimit) throw Error("test-scale only");
  const auto nodes = index.nodes();
  PeriodPathReport report;
  report.edge_paths.resize(nodes.size());

  // Parents have larger ids than their children; walk top-down.
  for (auto id = static_cast<std::int32_t>(nodes.size()) - 1; id >= 0; --id) {
    const TreeNode& node = nodes[id];
    // The root spells a non-empty string when every suffix starts alike.
    const Pos top = node.parent >= 0 ? nodes[node.parent].depth : 0;
    if (node.depth == top) continue;
    const auto periods = prefix_periods(index.label(id));
    std::int32_t above = node.parent >= 0 && !report.edge_paths[node.parent].empty()
                             ? report.edge_paths[node.parent].back()
                             : -1;
    auto& edge = report.edge_paths[id];
    edge.reserve(static_cast<std::size_t>(node.depth - top));
    for (Pos d = top + 1; d <= node.depth; ++d) {
      const Pos p = periods[d - 1];
      std::int32_t path = -1;
      if (d > 2 * p) {
        if (above >= 0 && report.paths[above].period == p) {
          path = above;
        } else {
          path = static_cast<std::int32_t>(report.paths.size());
          report.paths.push_back({p, {}});
        }
        report.paths[path].positions.push_back({id, d});
      }
      edge.push_back(path);
      above = path;
    }
  }
  return report;
}

}  // namespace novl
