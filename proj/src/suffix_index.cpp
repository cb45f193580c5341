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

#include "novl/suffix_index.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace novl {

std::vector<Pos> suffix_sort(std::string_view text) {
  const auto n = static_cast<Pos>(text.size());
  std::vector<Pos> sa(n);
  if (n == 0) return sa;

  // Prefix doubling. rank 0 stands for "past the end".
  std::vector<Pos> rank(n), next_rank(n), order(n);
  std::vector<Pos> count(std::max<Pos>(257, n + 1) + 1);

  for (Pos i = 0; i < n; ++i) {
    rank[i] = static_cast<unsigned char>(text[i]) + 1;
    ++count[rank[i]];
  }
  for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
  for (Pos i = n - 1; i >= 0; --i) sa[--count[rank[i]]] = i;

  Pos classes = 0;
  {
    Pos prev = -1;
    for (Pos j = 0; j < n; ++j) {
      if (rank[sa[j]] != prev) ++classes;
      prev = rank[sa[j]];
    }
  }

  for (Pos k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes without a k-shifted partner come first.
    Pos w = 0;
    for (Pos i = n - k; i < n; ++i) order[w++] = i;
    for (Pos j = 0; j < n; ++j) {
      if (sa[j] >= k) order[w++] = sa[j] - k;
    }

    const Pos domain = std::max<Pos>(257, classes + 1);
    std::fill(count.begin(), count.begin() + domain + 1, 0);
    for (Pos i = 0; i < n; ++i) ++count[rank[i]];
    for (Pos c = 1; c <= domain; ++c) count[c] += count[c - 1];
    for (Pos j = n - 1; j >= 0; --j) sa[--count[rank[order[j]]]] = order[j];

    auto second = [&](Pos i) { return i + k < n ? rank[i + k] : Pos{0}; };
    next_rank[sa[0]] = 1;
    for (Pos j = 1; j < n; ++j) {
      const Pos a = sa[j - 1];
      const Pos b = sa[j];
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      next_rank[b] = next_rank[a] + (same ? 0 : 1);
    }
    rank.swap(next_rank);
    classes = rank[sa[n - 1]];
  }
  return sa;
}

std::vector<Pos> lcp_array(std::string_view text, std::span<const Pos> sa) {
  const auto n = static_cast<Pos>(text.size());
  std::vector<Pos> inv(n), lcp(n, 0);
  for (Pos x = 0; x < n; ++x) inv[sa[x]] = x;
  Pos h = 0;
  for (Pos i = 0; i < n; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    const Pos j = sa[inv[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[inv[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

SuffixIndex SuffixIndex::build(std::string text) {
  if (text.empty()) throw Error("empty text");
  SuffixIndex index;
  index.text_ = std::move(text);
  auto sa = suffix_sort(index.text_);
  index.lcp_ = lcp_array(index.text_, sa);
  for (auto& y : sa) ++y;
  index.sa_ = std::move(sa);
  index.build_topology();
  return index;
}

SuffixIndex SuffixIndex::from_parts(std::string text, std::vector<Pos> sa,
                                    std::vector<Pos> lcp) {
  if (text.empty()) throw Error("empty text");
  const auto n = static_cast<Pos>(text.size());
  if (static_cast<Pos>(sa.size()) != n || static_cast<Pos>(lcp.size()) != n) {
    throw Error("suffix array size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (Pos y : sa) {
    if (y < 1 || y > n || seen[y - 1]) throw Error("suffix array is not a permutation");
    seen[y - 1] = true;
  }
  if (lcp[0] != 0) throw Error("lcp[1] must be 0");
  for (Pos x = 1; x < n; ++x) {
    const Pos limit = std::min(n - sa[x] + 1, n - sa[x - 1] + 1);
    if (lcp[x] < 0 || lcp[x] > limit) throw Error("lcp value out of range");
  }
  SuffixIndex index;
  index.text_ = std::move(text);
  index.sa_ = std::move(sa);
  index.lcp_ = std::move(lcp);
  index.build_topology();
  return index;
}

void SuffixIndex::build_topology() {
  const Pos n = size();
  inv_sa_.assign(n, 0);
  for (Pos x = 0; x < n; ++x) inv_sa_[sa_[x] - 1] = x + 1;

  nodes_.clear();
  children_.clear();
  leaf_node_.assign(n, -1);
  nodes_.reserve(2 * n);
  children_.reserve(2 * n);

  struct Open {
    Pos depth;
    Pos lb;
    std::size_t first_child;
  };
  std::vector<Open> stack;
  std::vector<std::int32_t> pending_children;

  auto finalize = [&](const Open& open, Pos rb) {
    const auto id = static_cast<std::int32_t>(nodes_.size());
    TreeNode node;
    node.l = open.lb + 1;
    node.r = rb + 1;
    node.depth = open.depth;
    node.child_begin = static_cast<std::int32_t>(children_.size());
    for (std::size_t c = open.first_child; c < pending_children.size(); ++c) {
      nodes_[pending_children[c]].parent = id;
      children_.push_back(pending_children[c]);
    }
    node.child_end = static_cast<std::int32_t>(children_.size());
    pending_children.resize(open.first_child);
    nodes_.push_back(node);
    return id;
  };

  for (Pos x = 0; x < n; ++x) {
    auto pending = static_cast<std::int32_t>(nodes_.size());
    TreeNode leaf;
    leaf.l = leaf.r = x + 1;
    leaf.depth = n - sa_[x] + 1;
    leaf.child_begin = leaf.child_end = static_cast<std::int32_t>(children_.size());
    nodes_.push_back(leaf);
    leaf_node_[x] = pending;

    const Pos h = x + 1 < n ? lcp_[x + 1] : -1;
    while (!stack.empty() && h < stack.back().depth) {
      pending_children.push_back(pending);
      const Open open = stack.back();
      stack.pop_back();
      pending = finalize(open, x);
    }
    if (!stack.empty() && h == stack.back().depth) {
      pending_children.push_back(pending);
    } else if (h >= 0) {
      const Pos lb = nodes_[pending].l - 1;
      stack.push_back({h, lb, pending_children.size()});
      pending_children.push_back(pending);
    } else {
      root_ = pending;
    }
  }
}

std::span<const std::int32_t> SuffixIndex::children(std::int32_t node) const {
  const auto& nd = nodes_[node];
  return std::span<const std::int32_t>(children_).subspan(
      nd.child_begin, nd.child_end - nd.child_begin);
}

std::string_view SuffixIndex::label(std::int32_t node) const {
  const auto& nd = nodes_[node];
  return std::string_view(text_).substr(sa_[nd.l - 1] - 1, nd.depth);
}

// First character below `offset` on the path to `node`; -1 for the sentinel.
int SuffixIndex::edge_char(std::int32_t node, Pos offset) const {
  const Pos at = sa_[nodes_[node].l - 1] - 1 + offset;
  return at < size() ? static_cast<unsigned char>(text_[at]) : -1;
}

std::optional<LocusInterval> SuffixIndex::locate(std::string_view pattern,
                                                 std::size_t* work) const {
  if (pattern.empty()) throw Error("empty pattern");
  const auto m = static_cast<Pos>(pattern.size());
  if (m > size()) return std::nullopt;

  std::size_t steps = 0;
  std::int32_t node = root_;
  Pos matched = 0;
  std::optional<LocusInterval> result;
  while (true) {
    const TreeNode& nd = nodes_[node];
    const Pos start = sa_[nd.l - 1] - 1;
    const Pos limit = std::min(m, nd.depth);
    bool mismatch = false;
    for (; matched < limit; ++matched) {
      ++steps;
      if (text_[start + matched] != pattern[matched]) {
        mismatch = true;
        break;
      }
    }
    if (mismatch) break;
    if (m <= nd.depth) {
      result = LocusInterval{nd.l, nd.r, m};
      break;
    }
    if (nd.is_leaf()) break;

    // Children are in lexicographic order of their first edge character.
    const int want = static_cast<unsigned char>(pattern[matched]);
    auto kids = children(node);
    std::size_t lo = 0;
    std::size_t hi = kids.size();
    while (lo < hi) {
      ++steps;
      const std::size_t mid = (lo + hi) / 2;
      if (edge_char(kids[mid], nd.depth) < want) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo == kids.size() || edge_char(kids[lo], nd.depth) != want) break;
    node = kids[lo];
  }
  if (work != nullptr) *work += steps;
  return result;
}

Pos SuffixIndex::leaf_start(Pos x) const {
  if (x < 1 || x > size()) throw Error("rank out of range");
  return sa_[x - 1];
}

Pos SuffixIndex::rank_of(Pos y) const {
  if (y < 1 || y > size()) throw Error("position out of range");
  return inv_sa_[y - 1];
}

Pos SuffixIndex::lcp(Pos x) const {
  if (x < 1 || x > size()) throw Error("rank out of range");
  return lcp_[x - 1];
}

}  // namespace novl
