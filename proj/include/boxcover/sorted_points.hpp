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
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxcover/core.hpp"

namespace boxcover {

enum class Axis { kX, kY };

inline double Coord(const Point& p, Axis axis) {
  return axis == Axis::kX ? p.x : p.y;
}

// Strict total order on points along one axis: (coordinate, id).
inline bool LessAlong(const Point& a, const Point& b, Axis axis) {
  double ca = Coord(a, axis);
  double cb = Coord(b, axis);
  return ca < cb || (ca == cb && a.id < b.id);
}

// The point set together with its x- and y-orders. Ties on a coordinate are
// broken by id, so every "separating line" is a position in one of the two
// permutations and the point at that position goes to the first side.
struct SortedPointSet {
  std::vector<Point> points;   // indexed by id
  std::vector<PointId> by_x;   // x-rank -> id
  std::vector<PointId> by_y;   // y-rank -> id
  std::vector<int> rank_x;     // id -> x-rank
  std::vector<int> rank_y;     // id -> y-rank

  int size() const { return static_cast<int>(points.size()); }

  const std::vector<PointId>& Order(Axis axis) const {
    return axis == Axis::kX ? by_x : by_y;
  }
  const std::vector<int>& Rank(Axis axis) const {
    return axis == Axis::kX ? rank_x : rank_y;
  }
  const Point& AtRank(Axis axis, int rank) const {
    return points[Order(axis)[rank]];
  }
};

namespace internal {

// Unsigned key with the same order as the double; -0.0 and 0.0 map alike.
inline uint64_t OrderedKey(double v) {
  const uint64_t bits = std::bit_cast<uint64_t>(v + 0.0);
  return bits >> 63 ? ~bits : bits | (uint64_t{1} << 63);
}

// Reused buffers for RadixOrder.
struct RadixScratch {
  std::vector<uint64_t> keys, keys_tmp;
  std::vector<PointId> ids_tmp;
};

// Ids of `points` (indexed by id) stably sorted by coordinate, which yields
// the (coordinate, id) order. LSD radix sort with byte digits, few enough
// buckets that every write cursor stays cached; digits shared by all keys
// are skipped.
inline std::vector<PointId> RadixOrder(std::span<const Point> points, Axis axis,
                                       RadixScratch& scratch) {
  constexpr int kBits = 8;
  constexpr int kBuckets = 1 << kBits;
  constexpr int kPasses = 64 / kBits;
  const size_t n = points.size();
  auto& keys = scratch.keys;
  auto& keys_tmp = scratch.keys_tmp;
  auto& ids_tmp = scratch.ids_tmp;
  keys.resize(n);
  keys_tmp.resize(n);
  ids_tmp.resize(n);
  std::vector<PointId> ids(n);
  std::array<std::array<uint32_t, kBuckets>, kPasses> hist{};
  for (size_t i = 0; i < n; ++i) {
    keys[i] = OrderedKey(Coord(points[i], axis));
    ids[i] = static_cast<PointId>(i);
    for (int pass = 0; pass < kPasses; ++pass) {
      ++hist[pass][(keys[i] >> (pass * kBits)) & (kBuckets - 1)];
    }
  }
  for (int pass = 0; pass < kPasses; ++pass) {
    auto& h = hist[pass];
    const int shift = pass * kBits;
    if (n == 0 || h[(keys[0] >> shift) & (kBuckets - 1)] == n) continue;
    uint32_t sum = 0;
    for (uint32_t& c : h) sum += std::exchange(c, sum);
    for (size_t i = 0; i < n; ++i) {
      const uint32_t dst = h[(keys[i] >> shift) & (kBuckets - 1)]++;
      keys_tmp[dst] = keys[i];
      ids_tmp[dst] = ids[i];
    }
    keys.swap(keys_tmp);
    ids.swap(ids_tmp);
  }
  return ids;
}

}  // namespace internal

// Throws std::invalid_argument on non-finite coordinates or ids that are not
// a permutation of [0, n).
inline SortedPointSet BuildSorted(std::vector<Point> points) {
  const int n = static_cast<int>(points.size());
  SortedPointSet s;
  bool identity = true;
  for (int i = 0; i < n; ++i) {
    const Point& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("non-finite coordinate for point " +
                                  std::to_string(p.id));
    }
    identity = identity && p.id == i;
  }
  if (identity) {
    s.points = std::move(points);
  } else {
    s.points.resize(n);
    std::vector<bool> seen(n, false);
    for (const Point& p : points) {
      if (p.id < 0 || p.id >= n || seen[p.id]) {
        throw std::invalid_argument("point ids must be dense and unique");
      }
      seen[p.id] = true;
      s.points[p.id] = p;
    }
  }
  internal::RadixScratch scratch;
  auto order = [&](Axis axis, std::vector<PointId>& perm,
                   std::vector<int>& rank) {
    perm = internal::RadixOrder(s.points, axis, scratch);
    rank.resize(n);
    for (int r = 0; r < n; ++r) rank[perm[r]] = r;
  };
  order(Axis::kX, s.by_x, s.rank_x);
  order(Axis::kY, s.by_y, s.rank_y);
  return s;
}

}  // namespace boxcover
