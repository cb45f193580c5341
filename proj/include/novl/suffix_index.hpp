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

#ifndef NOVL_SUFFIX_INDEX_HPP
#define NOVL_SUFFIX_INDEX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace novl {

/// Text positions and suffix ranks. Public APIs are 1-based.
using Pos = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Suffix array of `text` with 0-based entries. Suffixes are compared as if
/// terminated by a sentinel smaller than every byte, so a proper prefix of
/// another suffix sorts first.
std::vector<Pos> suffix_sort(std::string_view text);

/// Kasai LCP over a 0-based suffix array; lcp[0] = 0, lcp[x] = lcp(sa[x-1], sa[x]).
std::vector<Pos> lcp_array(std::string_view text, std::span<const Pos> sa);

/// Contiguous run of lexicographic ranks whose suffixes start with a pattern.
struct LocusInterval {
  Pos l = 0;
  Pos r = 0;
  Pos m = 0;

  Pos size() const { return r - l + 1; }
  friend bool operator==(const LocusInterval&, const LocusInterval&) = default;
};

/// A node of the LCP-interval tree. Leaves have l == r. A leaf whose depth
/// equals its parent's depth is a suffix that is also a proper prefix of
/// other suffixes (its edge carries only the implicit sentinel).
struct TreeNode {
  Pos l = 0;
  Pos r = 0;
  Pos depth = 0;
  std::int32_t parent = -1;
  std::int32_t child_begin = 0;
  std::int32_t child_end = 0;

  bool is_leaf() const { return child_begin == child_end; }
  Pos leaf_count() const { return r - l + 1; }
};

class SuffixIndex {
 public:
  /// Throws Error("empty text") on an empty input.
  static SuffixIndex build(std::string text);

  /// Reassembles an index from a stored suffix array (1-based values) and
  /// LCP array. Validates the permutation and recomputes the topology.
  static SuffixIndex from_parts(std::string text, std::vector<Pos> sa,
                                std::vector<Pos> lcp);

  Pos size() const { return static_cast<Pos>(text_.size()); }
  std::string_view text() const { return text_; }

  /// Locus of `pattern`, or nullopt when it does not occur. `work`, when
  /// given, is incremented by the characters compared plus child probes.
  std::optional<LocusInterval> locate(std::string_view pattern,
                                      std::size_t* work = nullptr) const;

  /// sa[x]: text start of the x-th smallest suffix.
  Pos leaf_start(Pos x) const;
  /// inv_sa[y]: lexicographic rank of the suffix starting at y.
  Pos rank_of(Pos y) const;
  /// LCP of suffixes with ranks x-1 and x; 0 for x == 1.
  Pos lcp(Pos x) const;

  /// Raw arrays, indexed from 0; values are 1-based positions / ranks.
  std::span<const Pos> sa() const { return sa_; }
  std::span<const Pos> inv_sa() const { return inv_sa_; }
  std::span<const Pos> lcp_values() const { return lcp_; }

  std::span<const TreeNode> nodes() const { return nodes_; }
  std::span<const std::int32_t> children(std::int32_t node) const;
  std::int32_t root() const { return root_; }
  std::int32_t leaf_node(Pos x) const { return leaf_node_[x - 1]; }

  /// Text of a node's path label.
  std::string_view label(std::int32_t node) const;

 private:
  SuffixIndex() = default;
  void build_topology();
  int edge_char(std::int32_t node, Pos offset) const;

  std::string text_;
  std::vector<Pos> sa_;
  std::vector<Pos> inv_sa_;
  std::vector<Pos> lcp_;
  std::vector<TreeNode> nodes_;
  std::vector<std::int32_t> children_;
  std::vector<std::int32_t> leaf_node_;
  std::int32_t root_ = -1;
};

}  // namespace novl

#endif  // NOVL_SUFFIX_INDEX_HPP
