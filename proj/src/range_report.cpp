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

#include "novl/range_report.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <tuple>

namespace novl {
namespace {

std::size_t select_in_word(std::uint64_t word, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) word &= word - 1;
  return static_cast<std::size_t>(std::countr_zero(word));
}

}  // namespace

BitVector::BitVector(const std::vector<bool>& bits)
    : size_(bits.size()), words_((bits.size() + 63) / 64, 0) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  ones_before_.resize(words_.size() + 1, 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    ones_before_[w + 1] = ones_before_[w] + std::popcount(words_[w]);
  }
}

std::size_t BitVector::rank1(std::size_t i) const {
  const std::size_t w = i / 64;
  const std::size_t bit = i % 64;
  std::size_t rank = ones_before_[w];
  if (bit != 0) rank += std::popcount(words_[w] & ((std::uint64_t{1} << bit) - 1));
  return rank;
}

std::size_t BitVector::select1(std::size_t k) const {
  // Last word whose preceding-ones count is <= k.
  const auto it = std::upper_bound(ones_before_.begin(), ones_before_.end(), k);
  const auto w = static_cast<std::size_t>(it - ones_before_.begin()) - 1;
  return w * 64 + select_in_word(words_[w], k - ones_before_[w]);
}

std::size_t BitVector::select0(std::size_t k) const {
  std::size_t lo = 0;
  std::size_t hi = words_.size();
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const std::size_t zeros = mid * 64 - ones_before_[mid];
    if (zeros <= k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::size_t zeros_before = lo * 64 - ones_before_[lo];
  return lo * 64 + select_in_word(~words_[lo], k - zeros_before);
}

Grid Grid::build(std::vector<GridPoint> points, Pos side) {
  Grid grid;
  grid.side_ = side;
  for (const auto& point : points) {
    if (point.x < 1 || point.x > side || point.y < 1 || point.y > side) {
      throw Error("grid point out of bounds");
    }
  }
  std::sort(points.begin(), points.end(), [](const GridPoint& a, const GridPoint& b) {
    return std::tie(a.y, a.x, a.payload) < std::tie(b.y, b.x, b.payload);
  });
  grid.points_ = std::move(points);
  grid.ys_.reserve(grid.points_.size());
  for (const auto& point : grid.points_) grid.ys_.push_back(point.y);

  grid.bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(
                               std::max<Pos>(side - 1, 1)))));
  std::vector<std::uint64_t> values;
  values.reserve(grid.points_.size());
  for (const auto& point : grid.points_) values.push_back(static_cast<std::uint64_t>(point.x - 1));

  std::vector<std::uint64_t> zeros;
  std::vector<std::uint64_t> ones;
  for (int level = 0; level < grid.bits_; ++level) {
    const int shift = grid.bits_ - 1 - level;
    std::vector<bool> bits(values.size());
    zeros.clear();
    ones.clear();
    for (std::size_t i = 0; i < values.size(); ++i) {
      bits[i] = ((values[i] >> shift) & 1U) != 0;
      (bits[i] ? ones : zeros).push_back(values[i]);
    }
    grid.levels_.emplace_back(bits);
    grid.zeros_.push_back(zeros.size());
    values.assign(zeros.begin(), zeros.end());
    values.insert(values.end(), ones.begin(), ones.end());
  }
  return grid;
}

void Grid::cover_x_range(Pos x_lo, Pos x_hi, std::size_t begin, std::size_t end,
                         std::vector<Cover>& out, std::size_t& work) const {
  const auto lo = static_cast<std::uint64_t>(x_lo - 1);
  const auto hi = static_cast<std::uint64_t>(x_hi - 1);

  struct Frame {
    int level;
    std::uint64_t prefix;
    std::size_t begin;
    std::size_t end;
  };
  // Depth-first, zero child first, so covers come out in ascending x.
  std::vector<Frame> stack{{0, 0, begin, end}};
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    ++work;
    if (frame.begin >= frame.end) continue;
    const int rest = bits_ - frame.level;
    const std::uint64_t node_lo = frame.prefix << rest;
    const std::uint64_t node_hi = node_lo + ((std::uint64_t{1} << rest) - 1);
    if (node_hi < lo || node_lo > hi) continue;
    if (lo <= node_lo && node_hi <= hi) {
      out.push_back({frame.level, frame.begin, frame.end});
      continue;
    }
    const BitVector& bv = levels_[frame.level];
    const std::size_t zeros = zeros_[frame.level];
    stack.push_back({frame.level + 1, (frame.prefix << 1) | 1U, zeros + bv.rank1(frame.begin),
                     zeros + bv.rank1(frame.end)});
    stack.push_back(
        {frame.level + 1, frame.prefix << 1, bv.rank0(frame.begin), bv.rank0(frame.end)});
  }
}

std::size_t Grid::to_point_order(int level, std::size_t index, std::size_t& work) const {
  for (int l = level - 1; l >= 0; --l) {
    ++work;
    const std::size_t zeros = zeros_[l];
    index = index < zeros ? levels_[l].select0(index) : levels_[l].select1(index - zeros);
  }
  return index;
}

std::vector<GridPoint> Grid::report(Pos x_lo, Pos x_hi, Pos y_lo, Pos y_hi,
                                    std::size_t* work) const {
  std::vector<GridPoint> out;
  x_lo = std::max<Pos>(x_lo, 1);
  y_lo = std::max<Pos>(y_lo, 1);
  x_hi = std::min(x_hi, side_);
  y_hi = std::min(y_hi, side_);
  if (points_.empty() || x_lo > x_hi || y_lo > y_hi) return out;

  std::size_t steps = 0;
  const auto begin = static_cast<std::size_t>(
      std::lower_bound(ys_.begin(), ys_.end(), y_lo) - ys_.begin());
  const auto end = static_cast<std::size_t>(
      std::upper_bound(ys_.begin(), ys_.end(), y_hi) - ys_.begin());
  std::vector<Cover> covers;
  cover_x_range(x_lo, x_hi, begin, end, covers, steps);

  // Each cover lists its members in point order; merge the streams.
  using Head = std::pair<std::size_t, std::size_t>;  // (point index, cover id)
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heads;
  std::vector<std::size_t> cursor(covers.size());
  for (std::size_t c = 0; c < covers.size(); ++c) {
    cursor[c] = covers[c].begin;
    heads.emplace(to_point_order(covers[c].level, cursor[c], steps), c);
  }
  while (!heads.empty()) {
    const auto [index, c] = heads.top();
    heads.pop();
    ++steps;
    out.push_back(points_[index]);
    if (++cursor[c] < covers[c].end) {
      heads.emplace(to_point_order(covers[c].level, cursor[c], steps), c);
    }
  }
  if (work != nullptr) *work += steps;
  return out;
}

std::optional<GridPoint> Grid::predecessor(Pos x_lo, Pos x_hi, Pos y_limit,
                                           std::size_t* work) const {
  x_lo = std::max<Pos>(x_lo, 1);
  x_hi = std::min(x_hi, side_);
  if (points_.empty() || x_lo > x_hi) return std::nullopt;

  std::size_t steps = 0;
  const auto end = static_cast<std::size_t>(
      std::lower_bound(ys_.begin(), ys_.end(), y_limit) - ys_.begin());
  std::vector<Cover> covers;
  cover_x_range(x_lo, x_hi, 0, end, covers, steps);

  std::optional<std::size_t> best;
  for (const auto& cover : covers) {
    const std::size_t index = to_point_order(cover.level, cover.end - 1, steps);
    if (!best || index > *best) best = index;
  }
  if (work != nullptr) *work += steps;
  if (!best) return std::nullopt;
  return points_[*best];
}

}  // namespace novl
