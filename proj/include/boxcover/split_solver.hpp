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

// (p,k) covering for p <= 3 by separating lines.
//
// Two or three pairwise interior-disjoint boxes always admit an axis-parallel
// line with exactly one box on one side. Fixing the line's orientation, the
// side holding the lone box and the lone box's outlier budget k', the best
// objective is min over split positions t of max(F(t), G(t)) where F is the
// first side's objective and G the second's. Growing the first side only adds
// points to it, so F is non-decreasing and G non-increasing in t, and the
// crossing point is found by binary search.
//
// Squares need one more ingredient. Each square is pushed away from the lines
// that bound its region (pinned at its extreme covered point), so a square
// bounded on one side per axis always fits. With three squares in a row the
// middle one is bounded on both sides and fits only if its side does not
// exceed the gap between its neighbours' points. That constraint is not
// monotone in t, so every evaluation carries two values: `relaxed` (gap
// ignored, monotone, a lower bound) and `exact`. The search runs on relaxed
// values; when the exact value at the crossing is worse than the relaxed
// optimum, the scan continues outward until the relaxed bound rules out any
// improvement.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "boxcover/base_solvers.hpp"
#include "boxcover/core.hpp"
#include "boxcover/extremes.hpp"
#include "boxcover/range_index.hpp"
#include "boxcover/sorted_points.hpp"

namespace boxcover {

inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

struct SplitConfig {
  Orientation orientation = Orientation::kVertical;
  Side single_side = Side::kFirst;
  int kprime = 0;
  int m = 0;  // split threshold, a rank along the split axis
};

struct SideResult {
  double relaxed = 0.0;
  double exact = 0.0;
  double side = 0.0;  // square side of a single-box side, else unused
  std::vector<AxisBox> boxes;  // realizes `exact`; absent boxes are omitted
};

struct SplitResult {
  double objective = kInfeasible;  // exact
  double relaxed = kInfeasible;
  SplitConfig config;
  std::vector<AxisBox> boxes;
};

struct SplitEval {
  SideResult first;
  SideResult second;

  double Relaxed() const { return std::max(first.relaxed, second.relaxed); }
  double Exact() const { return std::max(first.exact, second.exact); }
};

namespace internal {

inline std::vector<std::tuple<double, double, double, double>> SortedKeys(
    const std::vector<AxisBox>& boxes) {
  std::vector<std::tuple<double, double, double, double>> keys;
  for (const AxisBox& b : boxes) keys.emplace_back(b.xmin, b.ymin, b.xmax, b.ymax);
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Smaller objective wins; equal objectives fall back to the sorted box
// coordinates so the result does not depend on enumeration order.
inline bool BetterBoxes(double a_obj, const std::vector<AxisBox>& a,
                        double b_obj, const std::vector<AxisBox>& b) {
  if (a_obj != b_obj) return a_obj < b_obj;
  return SortedKeys(a) < SortedKeys(b);
}

}  // namespace internal

class CoverSolver {
 public:
  CoverSolver(const SortedPointSet& s, const RangeExtremaIndex& idx,
              Shape shape)
      : s_(s), idx_(idx), shape_(shape) {}

  Shape shape() const { return shape_; }

  CoverSolution Solve(int p, int k) const {
    if (p < 1 || p > 3) throw std::invalid_argument("p must be 1, 2 or 3");
    const int n = s_.size();
    k = std::clamp(k, 0, n);
    CoverSolution sol;
    sol.boxes = ObjectiveOnSide(RankBox::Full(n), p, k).boxes;
    FinalizeSolution(s_.points, sol);
    return sol;
  }

  // Best placement of p_side boxes with at most j outliers among the points
  // of `region`.
  SideResult ObjectiveOnSide(const RankBox& region, int p_side, int j,
                             bool relaxed_only = false) const {
    if (p_side == 1) return SingleBox(region, j);
    SplitResult best;
    bool have = false;
    double relaxed = kInfeasible;
    for (Orientation o : {Orientation::kVertical, Orientation::kHorizontal}) {
      for (Side side : {Side::kFirst, Side::kSecond}) {
        if (p_side == 2 && side == Side::kSecond) continue;
        for (int kprime = 0; kprime <= j; ++kprime) {
          SplitResult r =
              SplitSearch(region, o, side, kprime, p_side - 1, j, relaxed_only);
          relaxed = std::min(relaxed, r.relaxed);
          double obj = relaxed_only ? r.relaxed : r.objective;
          double best_obj = relaxed_only ? best.relaxed : best.objective;
          if (!have || internal::BetterBoxes(obj, r.boxes, best_obj,
                                             best.boxes)) {
            best = std::move(r);
            have = true;
          }
        }
      }
    }
    SideResult out;
    out.relaxed = relaxed;
    out.exact = relaxed_only ? relaxed : best.objective;
    out.boxes = std::move(best.boxes);
    return out;
  }

  // One box, pinned away from the region's bounding separators.
  SideResult SingleBox(const RankBox& region, int j) const {
    SideResult out;
    if (j >= idx_.Count(region)) return out;
    ExtremeSet e = RegionExtremes(idx_, region, j);
    std::vector<Point> pts = GatherPoints(s_, e.all);
    BaseResult base = SolveBase(pts, j, shape_);
    out.relaxed = out.exact = base.area;
    out.side = base.side;
    if (!base.box) return out;
    if (shape_ == Shape::kRect) {
      out.boxes.push_back(*base.box);
      return out;
    }
    AxisBox box = *base.box;
    for (Axis axis : {Axis::kX, Axis::kY}) {
      if (!PlaceAlong(region, axis, base.side, base.hull, box)) {
        out.exact = kInfeasible;
        return out;
      }
    }
    out.boxes.push_back(box);
    return out;
  }

  // Both sides of the split at `threshold`.
  SplitEval EvaluateSplit(const RankBox& region, Orientation o,
                          Side single_side, int kprime, int p_other, int k,
                          int threshold, bool relaxed_only = false) const {
    SplitEval ev;
    ev.first = EvaluatePart(region, o, single_side, kprime, p_other, k,
                            threshold, Side::kFirst, relaxed_only);
    ev.second = EvaluatePart(region, o, single_side, kprime, p_other, k,
                             threshold, Side::kSecond, relaxed_only);
    return ev;
  }

  // Minimizes max(first, second) over split thresholds for one
  // (orientation, lone side, k') family.
  SplitResult SplitSearch(const RankBox& region, Orientation o,
                          Side single_side, int kprime, int p_other, int k,
                          bool relaxed_only = false) const {
    const Axis axis = SplitAxis(o);
    const int lo = region.Lo(axis);
    const int hi = region.Hi(axis);

    int a = lo, b = hi;
    while (a < b) {
      int mid = a + (b - a) / 2;
      SplitEval ev =
          EvaluateSplit(region, o, single_side, kprime, p_other, k, mid, true);
      if (ev.first.relaxed >= ev.second.relaxed) {
        b = mid;
      } else {
        a = mid + 1;
      }
    }
    const int crossing = a;

    SplitResult best;
    best.config = {o, single_side, kprime, crossing};
    bool have = false;
    auto consider = [&](int t, const SplitEval& ev) {
      best.relaxed = std::min(best.relaxed, ev.Relaxed());
      std::vector<AxisBox> boxes = ev.first.boxes;
      boxes.insert(boxes.end(), ev.second.boxes.begin(),
                   ev.second.boxes.end());
      double obj = relaxed_only ? ev.Relaxed() : ev.Exact();
      if (!have ||
          internal::BetterBoxes(obj, boxes, best.objective, best.boxes)) {
        best.objective = obj;
        best.boxes = std::move(boxes);
        best.config.m = t;
        have = true;
      }
    };
    for (int t = std::max(lo, crossing - 1); t <= std::min(hi, crossing + 1);
         ++t) {
      consider(t, EvaluateSplit(region, o, single_side, kprime, p_other, k, t,
                                relaxed_only));
    }
    if (relaxed_only || best.objective <= best.relaxed) return best;

    // A strip constraint bit at the crossing: widen the scan while the
    // relaxed lower bound still leaves room for improvement. With a single
    // square on each side, whole blocks of thresholds are skipped when the
    // squares provably cannot fit (see BlockInfeasible); block lengths double
    // after each skip and halve on failure.
    const bool can_skip = shape_ == Shape::kSquare && p_other == 1;
    auto part = [&](int t, Side which) {
      return EvaluatePart(region, o, single_side, kprime, p_other, k, t, which,
                          false);
    };
    for (int t = crossing + 2, len = 1; t <= hi;) {
      SideResult first = part(t, Side::kFirst);
      if (first.relaxed >= best.objective) break;
      for (;;) {
        const int b = can_skip ? std::min(hi, t + len - 1) : t;
        SideResult second = part(b, Side::kSecond);
        if (can_skip && BlockInfeasible(region, o, t, b, first.side, second.side)) {
          t = b + 1;
          len *= 2;
          break;
        }
        if (b == t) {
          consider(t, SplitEval{std::move(first), std::move(second)});
          ++t;
          break;
        }
        len = std::max(1, len / 2);
      }
    }
    for (int t = crossing - 2, len = 1; t >= lo;) {
      SideResult second = part(t, Side::kSecond);
      if (second.relaxed >= best.objective) break;
      for (;;) {
        const int a = can_skip ? std::max(lo, t - len + 1) : t;
        SideResult first = part(a, Side::kFirst);
        if (can_skip && BlockInfeasible(region, o, a, t, first.side, second.side)) {
          t = a - 1;
          len *= 2;
          break;
        }
        if (a == t) {
          consider(t, SplitEval{std::move(first), std::move(second)});
          --t;
          break;
        }
        len = std::max(1, len / 2);
      }
    }
    return best;
  }

 private:
  SideResult EvaluatePart(const RankBox& region, Orientation o,
                          Side single_side, int kprime, int p_other, int k,
                          int threshold, Side part, bool relaxed_only) const {
    RankBox sub = SplitPart(region, o, threshold, part);
    bool lone = part == single_side;
    return ObjectiveOnSide(sub, lone ? 1 : p_other, lone ? kprime : k - kprime,
                           relaxed_only);
  }

  // Width available to a square in `region` along `axis`, if the region is
  // bounded on both sides.
  std::optional<double> StripWidth(const RankBox& region, Axis axis) const {
    const int lo = region.Lo(axis), hi = region.Hi(axis);
    if (lo == 0 || hi >= s_.size()) return std::nullopt;
    return Coord(s_.AtRank(axis, hi), axis) - Coord(s_.AtRank(axis, lo - 1), axis);
  }

  // True when no threshold in [a, b] admits both single squares. The first
  // side's square only grows with the threshold while its strip only widens,
  // and the second side mirrors that, so comparing the smallest square with
  // the widest strip over the block is conclusive.
  bool BlockInfeasible(const RankBox& region, Orientation o, int a, int b,
                       double first_side_at_a, double second_side_at_b) const {
    const RankBox widest_first = SplitPart(region, o, b, Side::kFirst);
    const RankBox widest_second = SplitPart(region, o, a, Side::kSecond);
    for (Axis axis : {Axis::kX, Axis::kY}) {
      auto w1 = StripWidth(widest_first, axis);
      if (w1 && first_side_at_a > *w1) return true;
      auto w2 = StripWidth(widest_second, axis);
      if (w2 && second_side_at_b > *w2) return true;
    }
    return false;
  }

  // Positions the square's interval along `axis`. Returns false when the
  // region is bounded on both sides and the square does not fit between the
  // neighbouring points.
  bool PlaceAlong(const RankBox& region, Axis axis, double side,
                  const AxisBox& hull, AxisBox& box) const {
    const int n = s_.size();
    const bool bounded_lo = region.Lo(axis) > 0;
    const bool bounded_hi = region.Hi(axis) < n;
    const double hmin = axis == Axis::kX ? hull.xmin : hull.ymin;
    const double hmax = axis == Axis::kX ? hull.xmax : hull.ymax;
    double start, end;
    if (bounded_lo && bounded_hi) {
      const double wall_lo = Coord(s_.AtRank(axis, region.Lo(axis) - 1), axis);
      const double wall_hi = Coord(s_.AtRank(axis, region.Hi(axis)), axis);
      if (side > wall_hi - wall_lo) return false;
      start = std::min(hmin, std::max(wall_lo, hmax - side));
      end = std::max(hmax, std::min(start + side, wall_hi));
    } else if (bounded_lo) {
      start = hmin;
      end = std::max(hmax, hmin + side);
    } else if (bounded_hi) {
      end = hmax;
      start = std::min(hmin, hmax - side);
    } else {
      return true;  // keep the base solver's canonical placement
    }
    if (axis == Axis::kX) {
      box.xmin = start;
      box.xmax = end;
    } else {
      box.ymin = start;
      box.ymax = end;
    }
    return true;
  }

  const SortedPointSet& s_;
  const RangeExtremaIndex& idx_;
  Shape shape_;
};

// Exact (p,k) solution over a preprocessed point set.
inline CoverSolution SolvePk(const SortedPointSet& s,
                             const RangeExtremaIndex& idx,
                             const ProblemSpec& spec) {
  return CoverSolver(s, idx, spec.shape).Solve(spec.p, spec.k);
}

}  // namespace boxcover
