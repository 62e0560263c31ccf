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

#include "boxcover/base_solvers.hpp"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "boxcover/extremes.hpp"
#include "boxcover/generators.hpp"
#include "boxcover/oracle.hpp"

namespace boxcover {
namespace {

using Coords = std::vector<std::pair<double, double>>;

int CountInside(const std::vector<Point>& q, const AxisBox& b) {
  return static_cast<int>(
      std::count_if(q.begin(), q.end(), [&](const Point& p) { return b.Contains(p); }));
}

TEST(SolveSquare1kTest, Examples) {
  auto q = MakePoints(Coords{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {5, 5}});
  BaseResult one = SolveSquare1k(q, 1);
  EXPECT_EQ(one.area, 1.0);
  ASSERT_TRUE(one.box);
  EXPECT_EQ(one.box->Key(), std::make_tuple(0.0, 0.0, 1.0, 1.0));
  EXPECT_EQ(one.covered_count, 4);

  EXPECT_EQ(SolveSquare1k(q, 0).area, 25.0);

  BaseResult four = SolveSquare1k(q, 4);
  EXPECT_EQ(four.area, 0.0);
  ASSERT_TRUE(four.box);
  EXPECT_GE(four.covered_count, 1);
}

TEST(SolveSquare1kTest, AllOutliersMeansNoBox) {
  auto q = MakePoints(Coords{{0, 0}, {3, 3}});
  BaseResult r = SolveSquare1k(q, 2);
  EXPECT_FALSE(r.box);
  EXPECT_EQ(r.area, 0.0);
  EXPECT_EQ(r.covered_count, 0);
  EXPECT_FALSE(SolveSquare1k({}, 0).box);
}

TEST(SolveSquare1kTest, SideSumRoundingStillCoversFarPoint) {
  // -73.127 + (69.487 - -73.127) rounds below 69.487.
  auto q = MakePoints(Coords{{-73.127, 0}, {69.487, 0}});
  BaseResult r = SolveSquare1k(q, 0);
  ASSERT_TRUE(r.box);
  EXPECT_EQ(r.side, 69.487 - -73.127);
  EXPECT_EQ(CountInside(q, *r.box), 2);
  EXPECT_EQ(r.covered_count, 2);
}

TEST(SolveRect1kTest, Examples) {
  auto q = MakePoints(Coords{{0, 0}, {1, 5}, {2, 1}, {3, 4}, {10, 10}});
  BaseResult r = SolveRect1k(q, 1);
  EXPECT_EQ(r.area, 15.0);
  ASSERT_TRUE(r.box);
  EXPECT_EQ(r.box->Key(), std::make_tuple(0.0, 0.0, 3.0, 5.0));

  EXPECT_EQ(SolveRect1k(MakePoints(Coords{{0, 0}, {4, 2}}), 0).area, 8.0);
  BaseResult single = SolveRect1k(MakePoints(Coords{{7, 7}}), 0);
  EXPECT_EQ(single.area, 0.0);
  ASSERT_TRUE(single.box);
  EXPECT_EQ(single.covered_count, 1);
}

TEST(CandidateSideLengthsTest, Examples) {
  EXPECT_EQ(CandidateSideLengths(MakePoints(Coords{{0, 0}, {1, 1}})),
            (std::vector<double>{0, 1}));
  EXPECT_EQ(CandidateSideLengths(MakePoints(Coords{{0, 0}, {2, 0}, {5, 0}})),
            (std::vector<double>{0, 2, 3, 5}));
  EXPECT_EQ(CandidateSideLengths(MakePoints(Coords{{0, 0}})),
            (std::vector<double>{0}));
}

TEST(CandidateSideLengthsTest, ContainsOptimalSide) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    auto q = GenUniform(12, seed, {0, 0, 50, 50});
    auto sides = CandidateSideLengths(q);
    for (int j = 0; j < 4; ++j) {
      double s = SolveSquare1k(q, j).side;
      EXPECT_TRUE(std::binary_search(sides.begin(), sides.end(), s));
    }
  }
}

class BaseSolverProperties : public ::testing::TestWithParam<Shape> {};

TEST_P(BaseSolverProperties, AgreesWithOracleAndExtremeSubset) {
  const Shape shape = GetParam();
  for (uint64_t seed = 0; seed < 60; ++seed) {
    std::vector<Point> q = seed % 3 == 0   ? GenSharedCoords(16, seed)
                           : seed % 3 == 1 ? GenUniform(18, seed, {0, 0, 40, 40})
                                           : GenClusters(2, 9, 5.0, seed);
    double prev = -1;
    for (int j = 0; j <= 8; ++j) {
      BaseResult r = SolveBase(q, j, shape);
      double oracle = OracleSolve(q, 1, j, shape).objective;
      EXPECT_NEAR(r.area, oracle, 1e-12 * std::max(1.0, oracle))
          << "seed " << seed << " j " << j;
      // More outliers never hurt.
      if (prev >= 0) {
        EXPECT_LE(r.area, prev);
      }
      prev = r.area;
      // Same answer on the extreme subset alone.
      EXPECT_EQ(SolveBase(RestrictToExtremes(q, j), j, shape).area, r.area);
      ASSERT_TRUE(r.box);
      EXPECT_GE(CountInside(q, *r.box), static_cast<int>(q.size()) - j);
      if (shape == Shape::kRect) {
        EXPECT_EQ(r.box->Key(), r.hull.Key());
      } else {
        EXPECT_EQ(r.side, std::max(r.hull.Width(), r.hull.Height()));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, BaseSolverProperties,
                         ::testing::Values(Shape::kSquare, Shape::kRect),
                         [](const auto& info) {
                           return std::string(ShapeName(info.param));
                         });

}  // namespace
}  // namespace boxcover
