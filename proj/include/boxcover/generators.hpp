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

// Seeded instance generators. All randomness comes from std::mt19937_64,
// whose output sequence is fixed by the standard; the conversions to doubles,
// normals and shuffles are done here rather than with <random> distributions,
// whose algorithms are implementation-defined. Output is therefore identical
// across compilers and platforms.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "boxcover/core.hpp"

namespace boxcover {

struct BBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 1000.0;
  double ymax = 1000.0;
};

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Standard normal by Box-Muller (one value per call, second one dropped).
  double Normal() {
    double u1 = 1.0 - Uniform();  // (0, 1]
    double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform integer in [0, bound).
  uint64_t Below(uint64_t bound) { return Next() % bound; }

 private:
  std::mt19937_64 engine_;
};

// n points uniform in `box`, with pairwise distinct x- and y-coordinates.
inline std::vector<Point> GenUniform(int n, uint64_t seed, BBox box = {}) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Rng rng(seed);
  std::unordered_set<double> used_x, used_y;
  std::vector<Point> out;
  out.reserve(n);
  auto draw = [&](std::unordered_set<double>& used, double lo, double hi) {
    for (;;) {
      double v = rng.Uniform(lo, hi);
      if (used.insert(v).second) return v;
    }
  };
  for (int i = 0; i < n; ++i) {
    double x = draw(used_x, box.xmin, box.xmax);
    double y = draw(used_y, box.ymin, box.ymax);
    out.push_back({x, y, i});
  }
  return out;
}

// c Gaussian clusters of per_cluster points each. Centers are uniform in
// [0, 1000]^2, offsets are normal with standard deviation `spread`.
inline std::vector<Point> GenClusters(int c, int per_cluster, double spread,
                                      uint64_t seed) {
  if (c < 1) throw std::invalid_argument("need at least one cluster");
  if (per_cluster < 0) throw std::invalid_argument("per_cluster < 0");
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(c) * per_cluster);
  for (int i = 0; i < c; ++i) {
    double cx = rng.Uniform(0.0, 1000.0);
    double cy = rng.Uniform(0.0, 1000.0);
    for (int j = 0; j < per_cluster; ++j) {
      double x = cx + spread * rng.Normal();
      double y = cy + spread * rng.Normal();
      out.push_back({x, y, static_cast<PointId>(out.size())});
    }
  }
  return out;
}

// Points (v, v) on the main diagonal, in input order.
inline std::vector<Point> GenDiagonal(std::span<const double> values) {
  std::vector<Point> out;
  out.reserve(values.size());
  for (double v : values) out.push_back({v, v, static_cast<PointId>(out.size())});
  return out;
}

// n distinct cells of a g x g integer grid, g = ceil(sqrt(n)), in shuffled
// order. Lots of shared coordinates on both axes.
inline std::vector<Point> GenSharedCoords(int n, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  int g = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (g * g < n) ++g;
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(g) * g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) cells.emplace_back(i, j);
  }
  Rng rng(seed);
  for (size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[rng.Below(i)]);
  }
  std::vector<Point> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back({static_cast<double>(cells[i].first),
                   static_cast<double>(cells[i].second), i});
  }
  return out;
}

}  // namespace boxcover
