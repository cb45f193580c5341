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

#ifndef NOVL_OCCURRENCE_SORTER_HPP
#define NOVL_OCCURRENCE_SORTER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "novl/suffix_index.hpp"

namespace novl {

/// Per-leaf text-order ranks inside nested micro-trees.
///
/// Level k partitions the leaves into maximal subtrees holding at most
/// thresholds[k] leaves, with thresholds[0] = n and
/// thresholds[k+1] = ceil(sqrt(thresholds[k])) until a threshold is <= 16.
/// A leaf's rank at level k is its position, by ascending text start, among
/// the leaves of its level-k micro-tree. Any locus with at most
/// thresholds[k] leaves lies inside one level-k micro-tree, so its leaves can
/// be sorted by rank keys drawn from [0, thresholds[k]).
class RenamingTable {
 public:
  static constexpr Pos kSmallThreshold = 16;

  static RenamingTable build(const SuffixIndex& index);

  /// Reassembles a table from stored thresholds and rank arrays
  /// (ranks[k][x-1]). The micro-tree roots are recomputed from `index`.
  static RenamingTable from_parts(const SuffixIndex& index, std::vector<Pos> thresholds,
                                  std::vector<std::vector<std::uint32_t>> ranks);

  static std::vector<Pos> threshold_chain(Pos n);

  std::size_t levels() const { return thresholds_.size(); }
  std::span<const Pos> thresholds() const { return thresholds_; }
  std::span<const std::uint32_t> ranks(std::size_t level) const { return ranks_[level]; }
  std::uint32_t leaf_rank(std::size_t level, Pos x) const { return ranks_[level][x - 1]; }

  /// Highest ancestor-or-self of `node` with at most thresholds[level]
  /// leaves; -1 when the node itself is larger.
  std::int32_t micro_root(std::size_t level, std::int32_t node) const {
    return micro_root_[level][node];
  }

  /// Deepest level whose threshold still covers `count` leaves.
  std::size_t level_for(Pos count) const;

  /// Stored rank entries (n per level).
  std::size_t rank_words() const;
  /// Bits a packed encoding would need per leaf: sum of ceil(log2 t_k).
  std::size_t packed_bits_per_leaf() const;

 private:
  void compute_micro_roots(const SuffixIndex& index);

  std::vector<Pos> thresholds_;
  std::vector<std::vector<std::uint32_t>> ranks_;
  std::vector<std::vector<std::int32_t>> micro_root_;
};

struct SortStats {
  std::size_t level = 0;
  Pos key_domain = 0;   // keys are < key_domain
  std::size_t work = 0;
  bool radix = false;
};

/// All occurrence starts of `locus`, ascending.
std::vector<Pos> report_sorted(const SuffixIndex& index, const RenamingTable& table,
                               const LocusInterval& locus, SortStats* stats = nullptr);

}  // namespace novl

#endif  // NOVL_OCCURRENCE_SORTER_HPP
