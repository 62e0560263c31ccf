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

// Brute-force reference solver for small instances. It shares only the core
// types with the fast path: no extreme-point pruning, no range index, no
// binary search. Subsets are materialized and every split position is
// scanned.
//
// Single box: every rectangle whose four edges are point coordinates is
// enumerated. This is complete because the bounding box of any covered set
// is such a rectangle, and the smallest square covering a set has side
// max(width, height) of its bounding box with the bottom-left corner at the
// bounding box's bottom-left corner, i.e. a coordinate difference as side and
// a coordinate pair as anchor.
//
// Several boxes: two or three disjoint boxes are separated by an axis-parallel
// line with one box alone on its side, so the oracle tries every orientation,
// split position, side for the lone box, and outlier budget split, and
// recurses into the side holding two boxes.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "boxcover/core.hpp"

namespace boxcover {

struct OracleLimits {
  int max_n_p1 = 64;
  int max_n_p2 = 20;
  int max_n_p3 = 16;

  int ForP(int p) const {
    return p == 1 ? max_n_p1 : p == 2 ? max_n_p2 : max_n_p3;
  }
};

class OracleSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace oracle_detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Separator positions bounding a region; index 0 is x, 1 is y.
struct Walls {
  std::array<std::optional<double>, 2> lo;
  std::array<std::optional<double>, 2> hi;
};

struct Candidate {
  double value = kInf;
  double side = 0.0;
  double xl = 0, yb = 0, xr = 0, yt = 0;  // bounding rectangle used
};

struct Placed {
  double value = 0.0;  // kInf when infeasible
  std::vector<AxisBox> boxes;
};

class BruteForce {
 public:
  BruteForce(std::span<const Point> points, Shape shape)
      : pts_(points.begin(), points.end()), shape_(shape) {}

  Placed Solve(int p, int k) {
    std::vector<int> all(pts_.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Walls none;
    if (p == 1) return One(all, none, k);
    if (p == 2) return Two(all, none, k);
    return Three(all, k);
  }

 private:
  static double C(const Point& p, int axis) { return axis == 0 ? p.x : p.y; }

  std::vector<int> SortedBy(std::vector<int> q, int axis) const {
    std::sort(q.begin(), q.end(), [&](int a, int b) {
      double ca = C(pts_[a], axis), cb = C(pts_[b], axis);
      if (ca != cb) return ca < cb;
      return pts_[a].id < pts_[b].id;
    });
    return q;
  }

  static uint64_t Mask(const std::vector<int>& q) {
    uint64_t m = 0;
    for (int i : q) m |= uint64_t{1} << i;
    return m;
  }

  // best[c] = cheapest candidate covering at least c points of q.
  const std::vector<Candidate>& Table(const std::vector<int>& q) {
    uint64_t key = Mask(q);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<double> xs, ys;
    for (int i : q) {
      xs.push_back(pts_[i].x);
      ys.push_back(pts_[i].y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const size_t nx = xs.size(), ny = ys.size();
    // prefix[i][j] = points with x-index < i and y-index < j.
    std::vector<std::vector<int>> prefix(nx + 1, std::vector<int>(ny + 1, 0));
    for (int i : q) {
      size_t xi = std::lower_bound(xs.begin(), xs.end(), pts_[i].x) - xs.begin();
      size_t yi = std::lower_bound(ys.begin(), ys.end(), pts_[i].y) - ys.begin();
      prefix[xi + 1][yi + 1] += 1;
    }
    for (size_t i = 1; i <= nx; ++i) {
      for (size_t j = 1; j <= ny; ++j) {
        prefix[i][j] += prefix[i - 1][j] + prefix[i][j - 1] - prefix[i - 1][j - 1];
      }
    }

    std::vector<Candidate> best(q.size() + 1);
    for (size_t a = 0; a < nx; ++a) {
      for (size_t b = a; b < nx; ++b) {
        for (size_t c = 0; c < ny; ++c) {
          for (size_t d = c; d < ny; ++d) {
            int count = prefix[b + 1][d + 1] - prefix[a][d + 1] -
                        prefix[b + 1][c] + prefix[a][c];
            double w = xs[b] - xs[a];
            double h = ys[d] - ys[c];
            double side = std::max(w, h);
            double value = shape_ == Shape::kSquare ? side * side : w * h;
            Candidate& slot = best[count];
            if (value < slot.value) {
              slot = {value, side, xs[a], ys[c], xs[b], ys[d]};
            }
          }
        }
      }
    }
    for (size_t c = q.size(); c-- > 0;) {
      if (best[c + 1].value < best[c].value) best[c] = best[c + 1];
    }
    return memo_.emplace(key, std::move(best)).first->second;
  }

  Placed One(const std::vector<int>& q, const Walls& walls, int j) {
    Placed out;
    const int need = static_cast<int>(q.size()) - j;
    if (need <= 0) return out;  // absent box
    const Candidate& cand = Table(q)[need];
    out.value = cand.value;
    if (shape_ == Shape::kRect) {
      out.boxes.push_back({cand.xl, cand.yb, cand.xr, cand.yt, Shape::kRect});
      return out;
    }
    // Intervals are widened to [lo, hi] when lo + s rounds below hi.
    const double s = cand.side;
    AxisBox box{cand.xl, cand.yb, cand.xl + s, cand.yb + s, Shape::kSquare};
    for (int axis = 0; axis < 2; ++axis) {
      const double lo = axis == 0 ? cand.xl : cand.yb;
      const double hi = axis == 0 ? cand.xr : cand.yt;
      double start = lo, end = std::max(hi, lo + s);
      if (walls.lo[axis] && walls.hi[axis]) {
        if (s > *walls.hi[axis] - *walls.lo[axis]) {
          out.value = kInf;
          out.boxes.clear();
          return out;
        }
        start = std::min(lo, std::max(*walls.lo[axis], hi - s));
        end = std::max(hi, std::min(start + s, *walls.hi[axis]));
      } else if (walls.hi[axis]) {
        end = hi;
        start = std::min(lo, hi - s);
      } else if (walls.lo[axis]) {
        end = std::max(hi, lo + s);
      }
      if (axis == 0) {
        box.xmin = start;
        box.xmax = end;
      } else {
        box.ymin = start;
        box.ymax = end;
      }
    }
    out.boxes.push_back(box);
    return out;
  }

  static Placed Combine(Placed a, const Placed& b) {
    a.value = std::max(a.value, b.value);
    a.boxes.insert(a.boxes.end(), b.boxes.begin(), b.boxes.end());
    return a;
  }

  // Splits q (sorted along `axis`) after its first m points.
  void SplitWalls(const std::vector<int>& sorted, int axis, size_t m,
                  const Walls& walls, Walls& first, Walls& second) const {
    first = walls;
    second = walls;
    if (m < sorted.size()) first.hi[axis] = C(pts_[sorted[m]], axis);
    if (m > 0) second.lo[axis] = C(pts_[sorted[m - 1]], axis);
  }

  Placed Two(const std::vector<int>& q, const Walls& walls, int j) {
    Placed best;
    best.value = kInf;
    for (int axis = 0; axis < 2; ++axis) {
      std::vector<int> sorted = SortedBy(q, axis);
      for (size_t m = 0; m <= sorted.size(); ++m) {
        std::vector<int> first(sorted.begin(), sorted.begin() + m);
        std::vector<int> second(sorted.begin() + m, sorted.end());
        Walls wf, ws;
        SplitWalls(sorted, axis, m, walls, wf, ws);
        for (int j1 = 0; j1 <= j; ++j1) {
          Placed cand = Combine(One(first, wf, j1), One(second, ws, j - j1));
          if (cand.value < best.value) best = std::move(cand);
        }
      }
    }
    return best;
  }

  Placed Three(const std::vector<int>& q, int k) {
    Placed best;
    best.value = kInf;
    Walls none;
    for (int axis = 0; axis < 2; ++axis) {
      std::vector<int> sorted = SortedBy(q, axis);
      for (size_t m = 0; m <= sorted.size(); ++m) {
        std::vector<int> first(sorted.begin(), sorted.begin() + m);
        std::vector<int> second(sorted.begin() + m, sorted.end());
        Walls wf, ws;
        SplitWalls(sorted, axis, m, none, wf, ws);
        for (int j1 = 0; j1 <= k; ++j1) {
          Placed lone_first = Combine(One(first, wf, j1), Two(second, ws, k - j1));
          if (lone_first.value < best.value) best = std::move(lone_first);
          Placed lone_second = Combine(Two(first, wf, k - j1), One(second, ws, j1));
          if (lone_second.value < best.value) best = std::move(lone_second);
        }
      }
    }
    return best;
  }

  std::vector<Point> pts_;
  Shape shape_;
  std::unordered_map<uint64_t, std::vector<Candidate>> memo_;
};

}  // namespace oracle_detail

// Exact optimum by exhaustive enumeration. Throws OracleSizeError above the
// per-p size limits.
inline CoverSolution OracleSolve(std::span<const Point> points, int p, int k,
                                 Shape shape,
                                 const OracleLimits& limits = {}) {
  if (p < 1 || p > 3) throw std::invalid_argument("p must be 1, 2 or 3");
  const int n = static_cast<int>(points.size());
  if (n > limits.ForP(p) || n > 64) {
    throw OracleSizeError("oracle limit for p=" + std::to_string(p) + " is n <= " +
                          std::to_string(std::min(limits.ForP(p), 64)) +
                          ", got n = " + std::to_string(n));
  }
  k = std::clamp(k, 0, n);
  CoverSolution sol;
  if (n > 0) {
    oracle_detail::BruteForce bf(points, shape);
    sol.boxes = bf.Solve(p, k).boxes;
  }
  FinalizeSolution(points, sol);
  return sol;
}

}  // namespace boxcover
