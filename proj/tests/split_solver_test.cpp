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

#include "boxcover/split_solver.hpp"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "boxcover/boxcover.hpp"

namespace boxcover {
namespace {

using Coords = std::vector<std::pair<double, double>>;

std::vector<Point> ClusterPair() {
  return MakePoints(Coords{{0, 0}, {1, 1}, {10, 0}, {12, 2}});
}

TEST(SolvePkTest, Examples) {
  EXPECT_EQ(Solve(ClusterPair(), {2, 0, Shape::kSquare}).objective, 4.0);

  CoverSolution one = Solve(ClusterPair(), {2, 1, Shape::kSquare});
  EXPECT_EQ(one.objective, 1.0);
  EXPECT_EQ(one.outliers, (std::vector<PointId>{3}));

  auto six = MakePoints(Coords{{0, 0}, {1, 1}, {10, 0}, {11, 1}, {20, 0}, {22, 2}});
  EXPECT_EQ(Solve(six, {3, 0, Shape::kSquare}).objective, 4.0);
}

TEST(SolvePkTest, EverythingOutlierGivesZero) {
  auto pts = GenUniform(9, 3);
  for (int p = 1; p <= 3; ++p) {
    for (Shape shape : {Shape::kSquare, Shape::kRect}) {
      EXPECT_EQ(Solve(pts, {p, 8, shape}).objective, 0.0);
      EXPECT_EQ(Solve(pts, {p, 50, shape}).objective, 0.0);
    }
  }
  EXPECT_EQ(Solve({}, {3, 0, Shape::kSquare}).objective, 0.0);
}

TEST(SolvePkTest, RejectsBadP) {
  Instance inst(ClusterPair());
  EXPECT_THROW(inst.Solve({0, 0, Shape::kSquare}), std::invalid_argument);
  EXPECT_THROW(inst.Solve({4, 0, Shape::kSquare}), std::invalid_argument);
}

// Three squares in a row where the middle one must fit between its
// neighbours' points. Ignoring that constraint gives 225; the true optimum,
// confirmed by the oracle, is 361.
TEST(SolvePkTest, MiddleSquareMustFitBetweenNeighbours) {
  auto pts = MakePoints(Coords{
      {14, 38}, {0, 30}, {39, 14}, {21, 33}, {16, 18}, {20, 23}, {28, 11}, {38, 25}});
  Instance inst(pts);
  CoverSolver solver(inst.sorted(), inst.index(), Shape::kSquare);
  EXPECT_EQ(solver.ObjectiveOnSide(RankBox::Full(8), 3, 0, true).relaxed, 225.0);
  ProblemSpec spec{3, 0, Shape::kSquare};
  CoverSolution sol = inst.Solve(spec);
  EXPECT_EQ(sol.objective, 361.0);
  EXPECT_EQ(ValidateSolution(pts, spec, sol), std::nullopt);
  EXPECT_EQ(OracleSolve(pts, 3, 0, Shape::kSquare).objective, 361.0);
}

TEST(SplitSearchTest, ClusterPairExample) {
  Instance inst(ClusterPair());
  CoverSolver solver(inst.sorted(), inst.index(), Shape::kSquare);
  RankBox all = RankBox::Full(4);
  SplitResult r = solver.SplitSearch(all, Orientation::kVertical, Side::kFirst,
                                     0, 1, 0);
  EXPECT_EQ(r.config.m, 2);
  EXPECT_EQ(r.objective, 4.0);
  SplitEval at = solver.EvaluateSplit(all, Orientation::kVertical, Side::kFirst,
                                      0, 1, 0, r.config.m);
  EXPECT_EQ(at.first.exact, 1.0);
  EXPECT_EQ(at.second.exact, 4.0);

  SplitEval empty = solver.EvaluateSplit(all, Orientation::kVertical,
                                         Side::kFirst, 0, 1, 0, 0);
  EXPECT_EQ(empty.first.exact, 0.0);
  EXPECT_TRUE(empty.first.boxes.empty());
}

class SplitSearchProperties : public ::testing::TestWithParam<Shape> {};

// Binary search against a scan over every threshold, and monotonicity of the
// two sides.
TEST_P(SplitSearchProperties, MatchesExhaustiveScan) {
  const Shape shape = GetParam();
  for (uint64_t seed = 0; seed < 12; ++seed) {
    auto pts = seed % 2 ? GenClusters(2, 30, 40.0, seed) : GenUniform(60, seed);
    Instance inst(pts);
    CoverSolver solver(inst.sorted(), inst.index(), shape);
    const RankBox all = RankBox::Full(60);
    const int k = 3;
    for (Orientation o : {Orientation::kVertical, Orientation::kHorizontal}) {
      for (int kprime = 0; kprime <= k; ++kprime) {
        double best = kInfeasible;
        double prev_f = -1, prev_g = kInfeasible;
        for (int m = 0; m <= 60; ++m) {
          SplitEval ev = solver.EvaluateSplit(all, o, Side::kFirst, kprime, 1, k, m);
          best = std::min(best, ev.Exact());
          EXPECT_GE(ev.first.exact, prev_f);
          EXPECT_LE(ev.second.exact, prev_g);
          prev_f = ev.first.exact;
          prev_g = ev.second.exact;
        }
        SplitResult r = solver.SplitSearch(all, o, Side::kFirst, kprime, 1, k);
        EXPECT_EQ(r.objective, best) << "seed " << seed << " kprime " << kprime;
      }
    }
  }
}

// Restricting to a side equals solving the materialized side from scratch.
// Walls only matter for exact values, so the relaxed value is compared.
TEST_P(SplitSearchProperties, ObjectiveOnSideMatchesRecomputation) {
  const Shape shape = GetParam();
  for (uint64_t seed = 0; seed < 6; ++seed) {
    auto pts = GenSharedCoords(40, seed);
    Instance inst(pts);
    CoverSolver solver(inst.sorted(), inst.index(), shape);
    for (Orientation o : {Orientation::kVertical, Orientation::kHorizontal}) {
      const auto& order = inst.sorted().Order(SplitAxis(o));
      for (int m = 0; m <= 40; m += 3) {
        for (Side side : {Side::kFirst, Side::kSecond}) {
          // Renumber in original id order so ties keep their order.
          std::vector<Point> subset;
          for (int r = 0; r < 40; ++r) {
            if ((r < m) == (side == Side::kFirst)) {
              subset.push_back(inst.sorted().points[order[r]]);
            }
          }
          std::sort(subset.begin(), subset.end(),
                    [](const Point& a, const Point& b) { return a.id < b.id; });
          for (size_t i = 0; i < subset.size(); ++i) {
            subset[i].id = static_cast<PointId>(i);
          }
          RankBox region = SplitPart(RankBox::Full(40), o, m, side);
          for (int j = 0; j <= 2; ++j) {
            SideResult one = solver.ObjectiveOnSide(region, 1, j);
            EXPECT_EQ(one.exact, SolveBase(subset, j, shape).area);
            SideResult two = solver.ObjectiveOnSide(region, 2, j);
            double fresh = Solve(subset, {2, j, shape}).objective;
            EXPECT_EQ(two.relaxed, fresh);
            EXPECT_GE(two.exact, two.relaxed);
          }
        }
      }
    }
  }
}

TEST_P(SplitSearchProperties, WholeSideEqualsWholeSolve) {
  const Shape shape = GetParam();
  auto pts = GenUniform(30, 8);
  Instance inst(pts);
  CoverSolver solver(inst.sorted(), inst.index(), shape);
  RankBox first_all = SplitPart(RankBox::Full(30), Orientation::kVertical, 30,
                                Side::kFirst);
  EXPECT_EQ(solver.ObjectiveOnSide(first_all, 1, 2).exact,
            inst.Solve({1, 2, shape}).objective);
}

bool SeparatedByLine(const std::vector<AxisBox>& boxes) {
  if (boxes.size() < 2) return true;
  for (size_t i = 0; i < boxes.size(); ++i) {
    bool left = true, right = true, below = true, above = true;
    for (size_t j = 0; j < boxes.size(); ++j) {
      if (i == j) continue;
      left = left && boxes[i].xmax <= boxes[j].xmin;
      right = right && boxes[i].xmin >= boxes[j].xmax;
      below = below && boxes[i].ymax <= boxes[j].ymin;
      above = above && boxes[i].ymin >= boxes[j].ymax;
    }
    if (left || right || below || above) return true;
  }
  return false;
}

TEST_P(SplitSearchProperties, InvariantUnderTranslationAndAxisSwap) {
  const Shape shape = GetParam();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto pts = GenUniform(25, seed, {0, 0, 64, 64});
    std::vector<Point> moved = pts, swapped = pts;
    for (auto& p : moved) {
      p.x += 1024;
      p.y -= 512;
    }
    for (auto& p : swapped) std::swap(p.x, p.y);
    for (int p = 1; p <= 3; ++p) {
      ProblemSpec spec{p, 2, shape};
      CoverSolution base = Solve(pts, spec);
      EXPECT_EQ(ValidateSolution(pts, spec, base), std::nullopt);
      EXPECT_TRUE(SeparatedByLine(base.boxes));
      EXPECT_NEAR(Solve(moved, spec).objective, base.objective,
                  1e-9 * std::max(1.0, base.objective));
      EXPECT_EQ(Solve(swapped, spec).objective, base.objective);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, SplitSearchProperties,
                         ::testing::Values(Shape::kSquare, Shape::kRect),
                         [](const auto& info) {
                           return std::string(ShapeName(info.param));
                         });

}  // namespace
}  // namespace boxcover
