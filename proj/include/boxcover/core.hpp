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
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace boxcover {

using PointId = std::int32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
  PointId id = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Shape { kSquare, kRect };

inline std::string_view ShapeName(Shape shape) {
  return shape == Shape::kSquare ? "square" : "rect";
}

inline std::optional<Shape> ParseShape(std::string_view name) {
  if (name == "square") return Shape::kSquare;
  if (name == "rect" || name == "rectangle") return Shape::kRect;
  return std::nullopt;
}

// Closed axis-aligned box. Zero width or height is allowed.
struct AxisBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;
  Shape shape = Shape::kRect;

  double Width() const { return xmax - xmin; }
  double Height() const { return ymax - ymin; }

  bool Contains(const Point& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }

  auto Key() const { return std::tie(xmin, ymin, xmax, ymax); }

  friend bool operator==(const AxisBox&, const AxisBox&) = default;
};

inline double BoxArea(const AxisBox& b) { return b.Width() * b.Height(); }

// Open interiors intersect. Touching edges or corners do not count.
// A box with zero width or height has an empty interior.
inline bool InteriorsOverlap(const AxisBox& a, const AxisBox& b) {
  if (a.xmin >= a.xmax || a.ymin >= a.ymax) return false;
  if (b.xmin >= b.xmax || b.ymin >= b.ymax) return false;
  return a.xmin < b.xmax && b.xmin < a.xmax && a.ymin < b.ymax &&
         b.ymin < a.ymax;
}

inline bool BoxesInteriorDisjoint(std::span<const AxisBox> boxes) {
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      if (InteriorsOverlap(boxes[i], boxes[j])) return false;
    }
  }
  return true;
}

struct ProblemSpec {
  int p = 1;
  int k = 0;
  Shape shape = Shape::kSquare;
};

// Absent box slots are simply not listed in `boxes`.
struct CoverSolution {
  std::vector<AxisBox> boxes;
  double objective = 0.0;
  int covered = 0;
  std::vector<PointId> outliers;
};

inline double MaxBoxArea(std::span<const AxisBox> boxes) {
  double best = 0.0;
  for (const AxisBox& b : boxes) best = std::max(best, BoxArea(b));
  return best;
}

// Fills `covered` and `outliers` from closed-box membership and sets
// `objective` to the largest box area.
inline void FinalizeSolution(std::span<const Point> points,
                             CoverSolution& sol) {
  sol.outliers.clear();
  sol.covered = 0;
  for (const Point& p : points) {
    bool inside = std::any_of(sol.boxes.begin(), sol.boxes.end(),
                              [&](const AxisBox& b) { return b.Contains(p); });
    if (inside) {
      ++sol.covered;
    } else {
      sol.outliers.push_back(p.id);
    }
  }
  sol.objective = MaxBoxArea(sol.boxes);
}

enum class Violation {
  kTooManyBoxes,
  kMalformedBox,
  kShape,
  kDisjointness,
  kCoverage,
  kOutlierMismatch,
  kObjectiveMismatch,
};

inline std::string_view ViolationName(Violation v) {
  switch (v) {
    case Violation::kTooManyBoxes: return "too-many-boxes";
    case Violation::kMalformedBox: return "malformed-box";
    case Violation::kShape: return "shape";
    case Violation::kDisjointness: return "disjointness";
    case Violation::kCoverage: return "coverage";
    case Violation::kOutlierMismatch: return "outlier-mismatch";
    case Violation::kObjectiveMismatch: return "objective-mismatch";
  }
  return "unknown";
}

inline bool NearlyEqual(double a, double b, double rel_tol = 1e-12) {
  if (a == b) return true;
  double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= rel_tol * scale;
}

// True when a box's width and height agree up to a 1e-12 relative tolerance
// measured against the box's coordinates: square edges are floating-point
// sums of a coordinate and a side length, so their error scales with the
// coordinates rather than with the side.
inline bool IsSquareWithinTolerance(const AxisBox& b, double rel_tol = 1e-12) {
  const double scale = std::max({std::abs(b.xmin), std::abs(b.xmax),
                                 std::abs(b.ymin), std::abs(b.ymax),
                                 b.Width(), b.Height()});
  return std::abs(b.Width() - b.Height()) <= rel_tol * scale;
}

// Checks every CoverSolution invariant against `points` and reports the first
// one that fails.
inline std::optional<Violation> ValidateSolution(std::span<const Point> points,
                                                 const ProblemSpec& spec,
                                                 const CoverSolution& sol) {
  if (static_cast<int>(sol.boxes.size()) > spec.p) {
    return Violation::kTooManyBoxes;
  }
  for (const AxisBox& b : sol.boxes) {
    if (!(b.xmin <= b.xmax) || !(b.ymin <= b.ymax)) {
      return Violation::kMalformedBox;
    }
    if (spec.shape == Shape::kSquare &&
        (b.shape != Shape::kSquare || !IsSquareWithinTolerance(b))) {
      return Violation::kShape;
    }
  }
  if (!BoxesInteriorDisjoint(sol.boxes)) return Violation::kDisjointness;

  const int n = static_cast<int>(points.size());
  int covered = 0;
  std::vector<PointId> outliers;
  for (const Point& p : points) {
    bool inside = std::any_of(sol.boxes.begin(), sol.boxes.end(),
                              [&](const AxisBox& b) { return b.Contains(p); });
    if (inside) {
      ++covered;
    } else {
      outliers.push_back(p.id);
    }
  }
  if (covered < n - spec.k) return Violation::kCoverage;
  std::vector<PointId> reported = sol.outliers;
  std::sort(reported.begin(), reported.end());
  std::sort(outliers.begin(), outliers.end());
  if (sol.covered != covered || reported != outliers) {
    return Violation::kOutlierMismatch;
  }
  if (!NearlyEqual(sol.objective, MaxBoxArea(sol.boxes))) {
    return Violation::kObjectiveMismatch;
  }
  return std::nullopt;
}

// Assigns dense ids in input order.
inline std::vector<Point> MakePoints(
    std::span<const std::pair<double, double>> coords) {
  std::vector<Point> out;
  out.reserve(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    out.push_back({coords[i].first, coords[i].second,
                   static_cast<PointId>(i)});
  }
  return out;
}

}  // namespace boxcover
