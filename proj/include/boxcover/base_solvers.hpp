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

// Exact single-box solvers: the smallest square or rectangle that leaves at
// most j points of a set uncovered.
//
// Both solvers first shrink the input to its (j+1)-extreme points. Any box
// with at most j outliers has all of its outliers among those points (see
// ExtremeSet), so "at most j extreme points outside" is equivalent to "at
// most j points outside", and the edges of an optimal box are coordinates of
// extreme points. The solvers therefore accept any subset of the input that
// contains its (j+1)-extreme points, which is how the split solver feeds them.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "boxcover/core.hpp"
#include "boxcover/extremes.hpp"
#include "boxcover/sorted_points.hpp"

namespace boxcover {

struct BaseResult {
  double area = 0.0;
  // Square side length, or max(width, height) for rectangles.
  double side = 0.0;
  std::optional<AxisBox> box;  // absent when every point may be an outlier
  // Bounding box of the covered points; meaningful only when `box` is set.
  AxisBox hull;
  int covered_count = 0;
};

// All pairwise absolute x- and y-differences, deduplicated, ascending,
// including 0.
inline std::vector<double> CandidateSideLengths(std::span<const Point> pts) {
  std::vector<double> out{0.0};
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      out.push_back(std::abs(pts[i].x - pts[j].x));
      out.push_back(std::abs(pts[i].y - pts[j].y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace internal {

struct ExtremeView {
  std::vector<Point> pts;
  std::vector<Point> by_y;      // ascending (y, id)
  std::vector<double> left_x;   // distinct x of the j+1 leftmost, ascending
  std::vector<double> right_x;  // distinct x of the j+1 rightmost, ascending
  std::vector<double> bottom_y;
  std::vector<double> top_y;
};

inline std::vector<double> DistinctSorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline ExtremeView MakeExtremeView(std::span<const Point> q, int j) {
  ExtremeView v;
  v.pts = RestrictToExtremes(q, j);
  const size_t count = std::min(v.pts.size(), static_cast<size_t>(j) + 1);
  auto firsts = [&](Axis axis, Direction dir) {
    std::vector<Point> sorted = v.pts;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Point& a, const Point& b) {
                return MoreExtreme(a, b, axis, dir);
              });
    std::vector<double> c;
    for (size_t i = 0; i < count; ++i) c.push_back(Coord(sorted[i], axis));
    return DistinctSorted(std::move(c));
  };
  v.left_x = firsts(Axis::kX, Direction::kMin);
  v.right_x = firsts(Axis::kX, Direction::kMax);
  v.bottom_y = firsts(Axis::kY, Direction::kMin);
  v.top_y = firsts(Axis::kY, Direction::kMax);
  v.by_y = v.pts;
  std::sort(v.by_y.begin(), v.by_y.end(), [](const Point& a, const Point& b) {
    return LessAlong(a, b, Axis::kY);
  });
  return v;
}

template <typename Inside>
void FillCoverage(std::span<const Point> pts, Inside inside, BaseResult& r) {
  r.covered_count = 0;
  bool first = true;
  for (const Point& p : pts) {
    if (!inside(p)) continue;
    ++r.covered_count;
    if (first) {
      r.hull = {p.x, p.y, p.x, p.y, Shape::kRect};
      first = false;
    } else {
      r.hull.xmin = std::min(r.hull.xmin, p.x);
      r.hull.xmax = std::max(r.hull.xmax, p.x);
      r.hull.ymin = std::min(r.hull.ymin, p.y);
      r.hull.ymax = std::max(r.hull.ymax, p.y);
    }
  }
}

// Lexicographically smallest bottom-left corner (x from the left extremes,
// y from a point coordinate) of a square of side s that leaves at most j of
// the view's points outside.
//
// Membership is decided on coordinate differences (p.x - xa <= s) rather than
// on p.x <= xa + s: side lengths are differences, and xa + (xr - xa) may round
// below xr.
//
// Completeness: if a square of side s covers a set S, the translate with
// bottom-left corner (xmin(S), ymin(S)) still covers S because s is at least
// the width and the height of S; xmin(S) has at most j points to its left, so
// it is one of the j+1 leftmost x-coordinates.
inline std::optional<std::pair<double, double>> PlaceSquare(
    const ExtremeView& v, int j, double s) {
  const int need = static_cast<int>(v.pts.size()) - j;
  std::vector<double> ys;
  for (double xa : v.left_x) {
    ys.clear();
    for (const Point& p : v.by_y) {
      if (xa <= p.x && p.x - xa <= s) ys.push_back(p.y);
    }
    if (static_cast<int>(ys.size()) < need) continue;
    size_t hi = 0;
    for (size_t lo = 0; lo < ys.size(); ++lo) {
      if (hi < lo) hi = lo;
      while (hi < ys.size() && ys[hi] - ys[lo] <= s) ++hi;
      if (static_cast<int>(hi - lo) >= need) return std::make_pair(xa, ys[lo]);
    }
  }
  return std::nullopt;
}

}  // namespace internal

// Smallest axis-aligned square covering at least |q| - j points of q.
// Candidate sides are binary searched with the placement test above; the
// optimal side is max(width, height) of the covered set, i.e. a difference
// between one of the j+1 leftmost and one of the j+1 rightmost x-coordinates
// or the analogous y-difference.
inline BaseResult SolveSquare1k(std::span<const Point> q, int j) {
  BaseResult r;
  j = std::max(j, 0);
  if (static_cast<size_t>(j) >= q.size()) return r;
  internal::ExtremeView v = internal::MakeExtremeView(q, j);

  std::vector<double> sides{0.0};
  for (double xl : v.left_x) {
    for (double xr : v.right_x) {
      if (xr >= xl) sides.push_back(xr - xl);
    }
  }
  for (double yb : v.bottom_y) {
    for (double yt : v.top_y) {
      if (yt >= yb) sides.push_back(yt - yb);
    }
  }
  sides = internal::DistinctSorted(std::move(sides));

  size_t lo = 0, hi = sides.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (internal::PlaceSquare(v, j, sides[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const double s = sides[lo];
  // The largest candidate spans the whole view, so a placement exists.
  const auto [ax, ay] = *internal::PlaceSquare(v, j, s);
  r.side = s;
  r.area = s * s;
  internal::FillCoverage(
      v.pts,
      [&](const Point& p) {
        return ax <= p.x && p.x - ax <= s && ay <= p.y && p.y - ay <= s;
      },
      r);
  // Widen by the rounding slack so the closed box contains the covered points.
  r.box = AxisBox{ax, ay, std::max(ax + s, r.hull.xmax),
                  std::max(ay + s, r.hull.ymax), Shape::kSquare};
  return r;
}

// Smallest axis-aligned rectangle covering at least |q| - j points of q.
// Enumerates vertical slabs whose left edge is one of the j+1 leftmost
// x-coordinates and whose right edge is one of the j+1 rightmost. Inside a
// slab with b outliers still allowed, the best rectangle drops a points from
// the bottom and b - a from the top for some a; one pass over a covers it.
inline BaseResult SolveRect1k(std::span<const Point> q, int j) {
  BaseResult r;
  j = std::max(j, 0);
  if (static_cast<size_t>(j) >= q.size()) return r;
  internal::ExtremeView v = internal::MakeExtremeView(q, j);
  const int total = static_cast<int>(v.pts.size());

  std::optional<AxisBox> best;
  double best_area = 0.0;
  std::vector<double> ys;
  for (double xl : v.left_x) {
    for (double xr : v.right_x) {
      if (xr < xl) continue;
      ys.clear();
      for (const Point& p : v.by_y) {
        if (xl <= p.x && p.x <= xr) ys.push_back(p.y);
      }
      const int inside = static_cast<int>(ys.size());
      const int budget = j - (total - inside);
      if (budget < 0 || budget >= inside) continue;
      for (int a = 0; a <= budget; ++a) {
        const double yb = ys[a];
        const double yt = ys[inside - 1 - (budget - a)];
        AxisBox cand{xl, yb, xr, yt, Shape::kRect};
        const double area = BoxArea(cand);
        if (!best || area < best_area ||
            (area == best_area && cand.Key() < best->Key())) {
          best = cand;
          best_area = area;
        }
      }
    }
  }
  r.box = best;
  internal::FillCoverage(
      v.pts, [&](const Point& p) { return best->Contains(p); }, r);
  // Shrink to the covered points; never larger, usually identical.
  r.box = r.hull;
  r.area = BoxArea(*r.box);
  r.side = std::max(r.box->Width(), r.box->Height());
  return r;
}

inline BaseResult SolveBase(std::span<const Point> q, int j, Shape shape) {
  return shape == Shape::kSquare ? SolveSquare1k(q, j) : SolveRect1k(q, j);
}

}  // namespace boxcover
