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

// Solver headers. io.hpp is separate because it pulls in nlohmann/json.

#pragma once

#include "boxcover/base_solvers.hpp"
#include "boxcover/core.hpp"
#include "boxcover/extremes.hpp"
#include "boxcover/generators.hpp"
#include "boxcover/oracle.hpp"
#include "boxcover/range_index.hpp"
#include "boxcover/sorted_points.hpp"
#include "boxcover/split_solver.hpp"
#include "boxcover/wavelet_matrix.hpp"

namespace boxcover {

// Preprocessed point set ready for repeated (p, k, shape) queries.
class Instance {
 public:
  explicit Instance(std::vector<Point> points)
      : sorted_(BuildSorted(std::move(points))), index_(sorted_) {}

  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  const SortedPointSet& sorted() const { return sorted_; }
  const RangeExtremaIndex& index() const { return index_; }
  std::span<const Point> points() const { return sorted_.points; }

  CoverSolution Solve(const ProblemSpec& spec) const {
    return SolvePk(sorted_, index_, spec);
  }

 private:
  SortedPointSet sorted_;
  RangeExtremaIndex index_;
};

inline CoverSolution Solve(std::vector<Point> points, const ProblemSpec& spec) {
  return Instance(std::move(points)).Solve(spec);
}

}  // namespace boxcover
