// Copyright 2026 The boxcover Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boxcover/extremes.hpp"
#include "boxcover/sorted_points.hpp"
#include "boxcover/wavelet_matrix.hpp"

namespace boxcover {

// Half-open rectangle in rank space: x-ranks [x0, x1), y-ranks [y0, y1).
struct RankBox {
  int x0 = 0;
  int x1 = 0;
  int y0 = 0;
  int y1 = 0;

  static RankBox Full(int n) { return {0, n, 0, n}; }

  int Lo(Axis axis) const { return axis == Axis::kX ? x0 : y0; }
  int Hi(Axis axis) const { return axis == Axis::kX ? x1 : y1; }

  friend bool operator==(const RankBox&, const RankBox&) = default;
};

enum class Orientation { kVertical, kHorizontal };
enum class Side { kFirst, kSecond };

// Vertical separators cut the x-order, horizontal ones the y-order.
inline Axis SplitAxis(Orientation o) {
  return o == Orientation::kVertical ? Axis::kX : Axis::kY;
}

inline RankBox SplitPart(const RankBox& box, Orientation o, int threshold,
                         Side side) {
  RankBox part = box;
  if (o == Orientation::kVertical) {
    (side == Side::kFirst ? part.x1 : part.x0) = threshold;
  } else {
    (side == Side::kFirst ? part.y1 : part.y0) = threshold;
  }
  return part;
}

// Static index answering "the m most extreme points along one axis inside a
// rank rectangle" for all four directions. Two wavelet matrices over the rank
// permutations (y-ranks listed in x-order and x-ranks listed in y-order) take
// O(n log n) bits; each reported point costs O(log n).
class RangeExtremaIndex {
 public:
  RangeExtremaIndex() = default;

  // Keeps a reference to `s`, which must outlive the index.
  explicit RangeExtremaIndex(const SortedPointSet& s)
      : n_(s.size()), s_(&s) {
    std::vector<uint32_t> seq(n_);
    for (int r = 0; r < n_; ++r) seq[r] = s.rank_y[s.by_x[r]];
    y_in_x_order_ = WaveletMatrix(std::move(seq), std::max(n_, 1));
    seq.assign(n_, 0);
    for (int r = 0; r < n_; ++r) seq[r] = s.rank_x[s.by_y[r]];
    x_in_y_order_ = WaveletMatrix(std::move(seq), std::max(n_, 1));

    auto block_starts = [&](Axis axis, const std::vector<PointId>& order) {
      std::vector<int> start(n_);
      for (int r = 0; r < n_; ++r) {
        bool same = r > 0 && Coord(s.points[order[r]], axis) ==
                                 Coord(s.points[order[r - 1]], axis);
        start[r] = same ? start[r - 1] : r;
      }
      return start;
    };
    x_block_start_ = block_starts(Axis::kX, s.by_x);
    y_block_start_ = block_starts(Axis::kY, s.by_y);
  }
  explicit RangeExtremaIndex(const SortedPointSet&&) = delete;

  int size() const { return n_; }

  int Count(const RankBox& box) const {
    if (box.x0 >= box.x1 || box.y0 >= box.y1) return 0;
    return static_cast<int>(
        y_in_x_order_.CountLess(box.x0, box.x1, box.y1) -
        y_in_x_order_.CountLess(box.x0, box.x1, box.y0));
  }

  // The min(m, |range|) most extreme points along `axis` among points whose
  // rank on the other axis lies in [lo, hi). Most extreme first; equal
  // coordinates are reported by ascending id.
  std::vector<PointId> TopM(Axis axis, int lo, int hi, Direction dir,
                            int m) const {
    RankBox box = RankBox::Full(n_);
    if (axis == Axis::kY) {
      box.x0 = lo;
      box.x1 = hi;
    } else {
      box.y0 = lo;
      box.y1 = hi;
    }
    return TopMInBox(axis, box, dir, m);
  }

  // Same contract restricted to an arbitrary rank rectangle.
  std::vector<PointId> TopMInBox(Axis axis, const RankBox& box, Direction dir,
                                 int m) const {
    std::vector<PointId> out;
    if (m <= 0 || box.x0 >= box.x1 || box.y0 >= box.y1) return out;
    // Positions run along the other axis; values are ranks along `axis`.
    const WaveletMatrix& wm =
        axis == Axis::kY ? y_in_x_order_ : x_in_y_order_;
    const std::vector<PointId>& order = s_->Order(axis);
    const std::vector<int>& block = axis == Axis::kY ? y_block_start_
                                                     : x_block_start_;
    const size_t begin = axis == Axis::kY ? box.x0 : box.y0;
    const size_t end = axis == Axis::kY ? box.x1 : box.y1;
    const int vlo = axis == Axis::kY ? box.y0 : box.x0;
    const int vhi = axis == Axis::kY ? box.y1 : box.x1;

    const size_t base = wm.CountLess(begin, end, vlo);
    const size_t total = wm.CountLess(begin, end, vhi) - base;
    const size_t want = std::min<size_t>(m, total);
    out.reserve(want);
    if (dir == Direction::kMin) {
      for (size_t i = 0; i < want; ++i) {
        out.push_back(order[wm.KthSmallest(begin, end, base + i)]);
      }
      return out;
    }
    // Descending by coordinate, but within a run of equal coordinates the
    // ranks ascend with id, so emit each run from its low end.
    uint64_t upper = vhi;
    while (out.size() < want) {
      size_t below = wm.CountLess(begin, end, upper);
      uint32_t v = wm.KthSmallest(begin, end, below - 1);
      int run_lo = std::max(block[v], vlo);
      size_t from = wm.CountLess(begin, end, run_lo);
      for (size_t i = from; i < below && out.size() < want; ++i) {
        out.push_back(order[wm.KthSmallest(begin, end, i)]);
      }
      upper = run_lo;
    }
    return out;
  }

 private:
  int n_ = 0;
  const SortedPointSet* s_ = nullptr;
  std::vector<int> x_block_start_;
  std::vector<int> y_block_start_;
  WaveletMatrix y_in_x_order_;
  WaveletMatrix x_in_y_order_;
};

inline RangeExtremaIndex BuildRangeIndex(const SortedPointSet& s) {
  return RangeExtremaIndex(s);
}

// ExtremeSet of the points inside a rank rectangle, with k+1 per side.
inline ExtremeSet RegionExtremes(const RangeExtremaIndex& idx,
                                 const RankBox& box, int k) {
  const int m = std::max(k, 0) + 1;
  ExtremeSet e;
  e.top = idx.TopMInBox(Axis::kY, box, Direction::kMax, m);
  e.bottom = idx.TopMInBox(Axis::kY, box, Direction::kMin, m);
  e.left = idx.TopMInBox(Axis::kX, box, Direction::kMin, m);
  e.right = idx.TopMInBox(Axis::kX, box, Direction::kMax, m);
  e.BuildUnion();
  return e;
}

// Extremes of the first m points (side = first) or the remaining n - m points
// (side = second) in x-order for a vertical separator, y-order for a
// horizontal one.
inline ExtremeSet PrefixExtremes(const RangeExtremaIndex& idx,
                                 const SortedPointSet& s,
                                 Orientation orientation, int m, Side side,
                                 int k) {
  const int n = s.size();
  if (m < 0 || m > n) throw std::out_of_range("split index out of range");
  RankBox part = SplitPart(RankBox::Full(n), orientation, m, side);
  return RegionExtremes(idx, part, k);
}

}  // namespace boxcover
