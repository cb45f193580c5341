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

#include "novl/occurrence_sorter.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <utility>

namespace novl {
namespace {

Pos ceil_sqrt(Pos value) {
  auto root = static_cast<Pos>(std::sqrt(static_cast<double>(value)));
  while (root * root > value) --root;
  while ((root + 1) * (root + 1) <= value) ++root;
  return root * root == value ? root : root + 1;
}

struct Keyed {
  std::uint32_t key;
  Pos y;
};

// One stable counting pass over digit(key) in [0, base).
template <typename Digit>
void counting_pass(std::vector<Keyed>& items, std::vector<Keyed>& scratch, Pos base,
                   Digit digit, std::size_t& work) {
  std::vector<Pos> count(base + 1, 0);
  for (const auto& item : items) ++count[digit(item.key) + 1];
  for (Pos d = 1; d <= base; ++d) count[d] += count[d - 1];
  scratch.resize(items.size());
  for (const auto& item : items) scratch[count[digit(item.key)]++] = item;
  items.swap(scratch);
  work += 2 * items.size() + static_cast<std::size_t>(base);
}

}  // namespace

std::vector<Pos> RenamingTable::threshold_chain(Pos n) {
  std::vector<Pos> chain{n};
  while (chain.back() > kSmallThreshold) chain.push_back(ceil_sqrt(chain.back()));
  return chain;
}

void RenamingTable::compute_micro_roots(const SuffixIndex& index) {
  const auto nodes = index.nodes();
  micro_root_.assign(thresholds_.size(), std::vector<std::int32_t>(nodes.size(), -1));
  for (std::size_t level = 0; level < thresholds_.size(); ++level) {
    const Pos limit = thresholds_[level];
    auto& roots = micro_root_[level];
    // Node ids are assigned in post-order, so parents come later.
    for (auto id = static_cast<std::int32_t>(nodes.size()) - 1; id >= 0; --id) {
      const TreeNode& node = nodes[id];
      if (node.leaf_count() > limit) continue;
      const bool parent_fits =
          node.parent >= 0 && nodes[node.parent].leaf_count() <= limit;
      roots[id] = parent_fits ? roots[node.parent] : id;
    }
  }
}

RenamingTable RenamingTable::build(const SuffixIndex& index) {
  RenamingTable table;
  const Pos n = index.size();
  table.thresholds_ = threshold_chain(n);
  table.compute_micro_roots(index);

  const auto inv_sa = index.inv_sa();
  std::vector<std::uint32_t> counter(index.nodes().size());
  table.ranks_.assign(table.thresholds_.size(), std::vector<std::uint32_t>(n));
  for (std::size_t level = 0; level < table.thresholds_.size(); ++level) {
    std::fill(counter.begin(), counter.end(), 0);
    auto& ranks = table.ranks_[level];
    const auto& roots = table.micro_root_[level];
    for (Pos y = 1; y <= n; ++y) {
      const Pos x = inv_sa[y - 1];
      const std::int32_t root = roots[index.leaf_node(x)];
      ranks[x - 1] = counter[root]++;
    }
  }
  return table;
}

RenamingTable RenamingTable::from_parts(const SuffixIndex& index, std::vector<Pos> thresholds,
                                        std::vector<std::vector<std::uint32_t>> ranks) {
  if (thresholds != threshold_chain(index.size())) throw Error("renaming thresholds mismatch");
  if (ranks.size() != thresholds.size()) throw Error("renaming level count mismatch");
  for (std::size_t level = 0; level < ranks.size(); ++level) {
    if (static_cast<Pos>(ranks[level].size()) != index.size()) {
      throw Error("renaming rank array size mismatch");
    }
    for (auto rank : ranks[level]) {
      if (rank >= thresholds[level]) throw Error("renaming rank out of range");
    }
  }
  RenamingTable table;
  table.thresholds_ = std::move(thresholds);
  table.ranks_ = std::move(ranks);
  table.compute_micro_roots(index);
  return table;
}

std::size_t RenamingTable::level_for(Pos count) const {
  std::size_t level = 0;
  while (level + 1 < thresholds_.size() && thresholds_[level + 1] >= count) ++level;
  return level;
}

std::size_t RenamingTable::rank_words() const {
  std::size_t words = 0;
  for (const auto& level : ranks_) words += level.size();
  return words;
}

std::size_t RenamingTable::packed_bits_per_leaf() const {
  std::size_t bits = 0;
  for (Pos t : thresholds_) bits += std::bit_width(static_cast<std::uint64_t>(t - 1));
  return bits;
}

std::vector<Pos> report_sorted(const SuffixIndex& index, const RenamingTable& table,
                               const LocusInterval& locus, SortStats* stats) {
  const Pos count = locus.size();
  SortStats local;
  local.level = table.level_for(count);
  local.key_domain = table.thresholds()[local.level];

  std::vector<Keyed> items;
  items.reserve(count);
  for (Pos x = locus.l; x <= locus.r; ++x) {
    items.push_back({table.leaf_rank(local.level, x), index.leaf_start(x)});
  }
  local.work += items.size();

  if (count <= RenamingTable::kSmallThreshold) {
    for (std::size_t i = 1; i < items.size(); ++i) {
      const Keyed item = items[i];
      std::size_t j = i;
      while (j > 0 && items[j - 1].key > item.key) {
        items[j] = items[j - 1];
        --j;
        ++local.work;
      }
      items[j] = item;
      ++local.work;
    }
  } else {
    // Keys are below t_k < count^2: two base-count digits.
    local.radix = true;
    const Pos base = count;
    assert(local.key_domain <= base * base);
    std::vector<Keyed> scratch;
    counting_pass(items, scratch, base, [base](std::uint32_t key) { return key % base; },
                  local.work);
    counting_pass(items, scratch, base, [base](std::uint32_t key) { return key / base; },
                  local.work);
  }

  std::vector<Pos> starts;
  starts.reserve(items.size());
  for (const auto& item : items) starts.push_back(item.y);
  if (stats != nullptr) *stats = local;
  return starts;
}

}  // namespace novl
