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
#include <numeric>
#include <span>
#include <vector>

#include "boxcover/core.hpp"
#include "boxcover/sorted_points.hpp"

namespace boxcover {

enum class Direction { kMax, kMin };

// "More extreme" order for one axis and direction: the coordinate decides,
// equal coordinates are ordered by ascending id in both directions.
inline bool MoreExtreme(const Point& a, const Point& b, Axis axis,
                        Direction dir) {
  double ca = Coord(a, axis);
  double cb = Coord(b, axis);
  if (ca != cb) return dir == Direction::kMax ? ca > cb : ca < cb;
  return a.id < b.id;
}

// The (k+1)-extreme points of a point set: up to k+1 points per side, each
// list ordered from the most extreme point inward.
//
// Every point lying outside a box that leaves at most k points uncovered is
// in `all`: if a point above the box were not among the k+1 topmost, the
// k+1 topmost would all be above the box as well.
struct ExtremeSet {
  std::vector<PointId> top;
  std::vector<PointId> bottom;
  std::vector<PointId> left;
  std::vector<PointId> right;
  std::vector<PointId> all;  // sorted, deduplicated union

  void BuildUnion() {
    all.clear();
    all.reserve(top.size() + bottom.size() + left.size() + right.size());
    for (const auto* list : {&top, &bottom, &left, &right}) {
      all.insert(all.end(), list->begin(), list->end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
  }
};

namespace internal {

// Indices into `points` of the `count` most extreme points, most extreme
// first. nth_element keeps the selection linear on average.
inline std::vector<size_t> SelectExtreme(std::span<const Point> points,
                                         size_t count, Axis axis,
                                         Direction dir) {
  std::vector<size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  auto cmp = [&](size_t a, size_t b) {
    return MoreExtreme(points[a], points[b], axis, dir);
  };
  count = std::min(count, idx.size());
  if (count < idx.size()) {
    std::nth_element(idx.begin(), idx.begin() + count, idx.end(), cmp);
    idx.resize(count);
  }
  std::sort(idx.begin(), idx.end(), cmp);
  return idx;
}

inline std::vector<PointId> ToIds(std::span<const Point> points,
                                  const std::vector<size_t>& idx) {
  std::vector<PointId> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(points[i].id);
  return out;
}

}  // namespace internal

// Linear-time (expected) selection of the k+1 extremes along each side; does
// not rely on any presorted order.
inline ExtremeSet ExtremePoints(std::span<const Point> points, int k) {
  size_t count = static_cast<size_t>(std::max(k, 0)) + 1;
  ExtremeSet e;
  auto select = [&](Axis axis, Direction dir) {
    return internal::ToIds(points,
                           internal::SelectExtreme(points, count, axis, dir));
  };
  e.top = select(Axis::kY, Direction::kMax);
  e.bottom = select(Axis::kY, Direction::kMin);
  e.left = select(Axis::kX, Direction::kMin);
  e.right = select(Axis::kX, Direction::kMax);
  e.BuildUnion();
  return e;
}

// The points of `points` that are (k+1)-extreme, in input order.
inline std::vector<Point> RestrictToExtremes(std::span<const Point> points,
                                             int k) {
  size_t count = static_cast<size_t>(std::max(k, 0)) + 1;
  if (4 * count >= points.size()) {
    return std::vector<Point>(points.begin(), points.end());
  }
  std::vector<size_t> keep;
  for (Axis axis : {Axis::kX, Axis::kY}) {
    for (Direction dir : {Direction::kMin, Direction::kMax}) {
      auto sel = internal::SelectExtreme(points, count, axis, dir);
      keep.insert(keep.end(), sel.begin(), sel.end());
    }
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Point> out;
  out.reserve(keep.size());
  for (size_t i : keep) out.push_back(points[i]);
  return out;
}

inline ExtremeSet ExtremePoints(const SortedPointSet& s, int k) {
  return ExtremePoints(std::span<const Point>(s.points), k);
}

inline std::vector<Point> GatherPoints(const SortedPointSet& s,
                                       std::span<const PointId> ids) {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (PointId id : ids) out.push_back(s.points[id]);
  return out;
}

}  // namespace boxcover
