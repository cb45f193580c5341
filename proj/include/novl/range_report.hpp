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

#ifndef NOVL_RANGE_REPORT_HPP
#define NOVL_RANGE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "novl/suffix_index.hpp"

namespace novl {

struct GridPoint {
  Pos x = 0;
  Pos y = 0;
  std::uint64_t payload = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Plain bit vector with rank and select.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(const std::vector<bool>& bits);

  std::size_t size() const { return size_; }
  bool operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  /// Ones in [0, i).
  std::size_t rank1(std::size_t i) const;
  std::size_t rank0(std::size_t i) const { return i - rank1(i); }
  /// Position of the k-th one / zero, k counted from 0.
  std::size_t select1(std::size_t k) const;
  std::size_t select0(std::size_t k) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::size_t> ones_before_;  // per word, plus a final total
};

/// Static point set on a side x side grid. Reports rectangles in ascending
/// (y, x, payload) order and answers "last point below y" queries.
///
/// Points are kept sorted by (y, x, payload); a wavelet matrix over their x
/// values decomposes any x-range into O(log n) nodes whose members are
/// mapped back to point order and merged.
class Grid {
 public:
  Grid() = default;

  /// Throws Error when a coordinate lies outside [1, side].
  static Grid build(std::vector<GridPoint> points, Pos side);

  std::size_t size() const { return points_.size(); }
  Pos side() const { return side_; }
  std::span<const GridPoint> points() const { return points_; }

  /// Points with x in [x_lo, x_hi] and y in [y_lo, y_hi], ascending by y.
  /// Bounds are clamped to the grid; an inverted rectangle is empty.
  std::vector<GridPoint> report(Pos x_lo, Pos x_hi, Pos y_lo, Pos y_hi,
                                std::size_t* work = nullptr) const;

  /// Among points with x in [x_lo, x_hi] and y < y_limit, the one that comes
  /// last in (y, x, payload) order.
  std::optional<GridPoint> predecessor(Pos x_lo, Pos x_hi, Pos y_limit,
                                       std::size_t* work = nullptr) const;

 private:
  struct Cover {
    int level;
    std::size_t begin;
    std::size_t end;
  };

  void cover_x_range(Pos x_lo, Pos x_hi, std::size_t begin, std::size_t end,
                     std::vector<Cover>& out, std::size_t& work) const;
  std::size_t to_point_order(int level, std::size_t index, std::size_t& work) const;

  Pos side_ = 0;
  int bits_ = 0;
  std::vector<GridPoint> points_;
  std::vector<Pos> ys_;
  std::vector<BitVector> levels_;
  std::vector<std::size_t> zeros_;
};

}  // namespace novl

#endif  // NOVL_RANGE_REPORT_HPP
