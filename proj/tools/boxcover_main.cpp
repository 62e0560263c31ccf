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

// boxcover command-line tool.
//
// Exit codes: 0 success, 1 verify mismatch, 2 unreadable or malformed input,
// 3 invalid flags, 4 instance over the oracle size limit.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boxcover/boxcover.hpp"
#include "boxcover/io.hpp"
#include "json.hpp"

namespace {

using boxcover::CoverSolution;
using boxcover::ProblemSpec;

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kBadInput = 2,
  kBadFlags = 3,
  kTooLarge = 4,
};

struct ProblemFlags {
  int p = 1;
  int k = 0;
  std::string shape = "square";

  void Add(CLI::App* cmd) {
    cmd->add_option("--p", p, "number of boxes (1-3)")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--k", k, "maximum number of outliers")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--shape", shape, "square or rect")
        ->check(CLI::IsMember({"square", "rect", "rectangle"}));
  }

  ProblemSpec Spec() const {
    return {p, k, *boxcover::ParseShape(shape)};
  }
};

void PrintText(std::ostream& out, const ProblemSpec& spec,
               const CoverSolution& sol) {
  out << "p " << spec.p << " k " << spec.k << " shape "
      << boxcover::ShapeName(spec.shape) << '\n'
      << "objective " << boxcover::io_detail::FormatDouble(sol.objective) << '\n'
      << "covered " << sol.covered << '\n';
  for (const auto& b : sol.boxes) {
    out << "box " << boxcover::io_detail::FormatDouble(b.xmin) << ' '
        << boxcover::io_detail::FormatDouble(b.ymin) << ' '
        << boxcover::io_detail::FormatDouble(b.xmax) << ' '
        << boxcover::io_detail::FormatDouble(b.ymax) << '\n';
  }
  out << "outliers";
  for (auto id : sol.outliers) out << ' ' << id;
  out << '\n';
}

bool WriteFile(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  return static_cast<bool>(out);
}

int RunSolve(const std::string& input, const ProblemFlags& flags,
             const std::string& format, const std::string& svg_path) {
  std::vector<boxcover::Point> points = boxcover::ReadPointsFile(input);
  ProblemSpec spec = flags.Spec();
  boxcover::Instance inst(points);
  CoverSolution sol = inst.Solve(spec);
  if (format == "json") {
    std::cout << boxcover::SolutionToJson(spec, sol).dump(2) << '\n';
  } else {
    PrintText(std::cout, spec, sol);
  }
  if (!svg_path.empty() &&
      !WriteFile(svg_path, boxcover::RenderSvg(points, sol))) {
    std::cerr << "cannot write " << svg_path << '\n';
    return kBadInput;
  }
  return kOk;
}

int RunGen(const std::string& kind, const std::vector<std::string>& args,
           uint64_t seed, const std::string& out_path) {
  auto number = [&](size_t i, const char* what) {
    if (i >= args.size()) throw CLI::ValidationError(std::string("missing ") + what);
    try {
      size_t used = 0;
      double v = std::stod(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
      return v;
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string("bad ") + what + " '" + args[i] + "'");
    }
  };
  auto count = [&](size_t i, const char* what) {
    double v = number(i, what);
    if (v < 0 || v != static_cast<double>(static_cast<int>(v))) {
      throw CLI::ValidationError(std::string(what) + " must be a non-negative integer");
    }
    return static_cast<int>(v);
  };

  std::vector<boxcover::Point> points;
  if (kind == "uniform") {
    boxcover::BBox box;
    if (args.size() == 5) {
      box = {number(1, "xmin"), number(2, "ymin"), number(3, "xmax"),
             number(4, "ymax")};
    } else if (args.size() != 1) {
      throw CLI::ValidationError("usage: gen uniform N [XMIN YMIN XMAX YMAX]");
    }
    points = boxcover::GenUniform(count(0, "N"), seed, box);
  } else if (kind == "clusters") {
    if (args.size() != 3) {
      throw CLI::ValidationError("usage: gen clusters C PER_CLUSTER SPREAD");
    }
    int c = count(0, "C");
    if (c < 1) throw CLI::ValidationError("C must be at least 1");
    points = boxcover::GenClusters(c, count(1, "PER_CLUSTER"),
                                   number(2, "SPREAD"), seed);
  } else if (kind == "diagonal") {
    std::vector<double> values;
    for (size_t i = 0; i < args.size(); ++i) values.push_back(number(i, "value"));
    points = boxcover::GenDiagonal(values);
  } else if (kind == "shared") {
    if (args.size() != 1) throw CLI::ValidationError("usage: gen shared N");
    points = boxcover::GenSharedCoords(count(0, "N"), seed);
  } else {
    throw CLI::ValidationError("unknown generator '" + kind +
                               "' (uniform, clusters, diagonal, shared)");
  }

  std::ostringstream text;
  boxcover::WritePoints(text, points);
  if (out_path.empty() || out_path == "-") {
    std::cout << text.str();
  } else if (!WriteFile(out_path, text.str())) {
    std::cerr << "cannot write " << out_path << '\n';
    return kBadInput;
  }
  return kOk;
}

// `inject_fault` enlarges the largest fast box before comparing; it exists so
// the mismatch path can be exercised end to end.
int RunVerify(const std::string& input, const ProblemFlags& flags,
              bool inject_fault) {
  std::vector<boxcover::Point> points = boxcover::ReadPointsFile(input);
  ProblemSpec spec = flags.Spec();
  const int limit = boxcover::OracleLimits{}.ForP(spec.p);
  if (static_cast<int>(points.size()) > limit) {
    std::cerr << "instance has " << points.size() << " points; the oracle for p="
              << spec.p << " handles at most " << limit << '\n';
    return kTooLarge;
  }
  CoverSolution fast = boxcover::Instance(points).Solve(spec);
  if (inject_fault) {
    if (fast.boxes.empty()) {
      fast.boxes.push_back({0, 0, 1, 1, spec.shape});
    } else {
      auto largest = std::max_element(
          fast.boxes.begin(), fast.boxes.end(),
          [](const auto& a, const auto& b) { return boxcover::BoxArea(a) < boxcover::BoxArea(b); });
      largest->xmax += 1.0;
      largest->ymax += 1.0;
    }
    boxcover::FinalizeSolution(points, fast);
  }
  CoverSolution oracle =
      boxcover::OracleSolve(points, spec.p, spec.k, spec.shape);

  auto fast_bad = boxcover::ValidateSolution(points, spec, fast);
  auto oracle_bad = boxcover::ValidateSolution(points, spec, oracle);
  const bool match = boxcover::NearlyEqual(fast.objective, oracle.objective);
  std::cout << "fast " << boxcover::io_detail::FormatDouble(fast.objective)
            << " oracle " << boxcover::io_detail::FormatDouble(oracle.objective)
            << '\n';
  if (fast_bad) std::cout << "fast solution invalid: " << ViolationName(*fast_bad) << '\n';
  if (oracle_bad) {
    std::cout << "oracle solution invalid: " << ViolationName(*oracle_bad) << '\n';
  }
  if (!match || fast_bad || oracle_bad) {
    std::cout << "MISMATCH\n";
    return kMismatch;
  }
  std::cout << "OK\n";
  return kOk;
}

int RunBench(const ProblemFlags& flags, int n, uint64_t seed, int reps) {
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };
  ProblemSpec spec = flags.Spec();
  nlohmann::json runs = nlohmann::json::array();
  bool identical = true;
  double first_objective = 0.0;
  for (int r = 0; r < reps; ++r) {
    std::vector<boxcover::Point> points = boxcover::GenUniform(n, seed);
    auto t0 = Clock::now();
    boxcover::Instance inst(std::move(points));
    auto t1 = Clock::now();
    CoverSolution sol = inst.Solve(spec);
    auto t2 = Clock::now();
    if (r == 0) first_objective = sol.objective;
    identical = identical && sol.objective == first_objective;
    runs.push_back({{"preprocess_s", seconds(t0, t1)},
                    {"solve_s", seconds(t1, t2)},
                    {"total_s", seconds(t0, t2)},
                    {"objective", sol.objective},
                    {"covered", sol.covered}});
  }
  nlohmann::json report = {{"generator", "uniform"},
                           {"n", n},
                           {"seed", seed},
                           {"p", spec.p},
                           {"k", spec.k},
                           {"shape", std::string(boxcover::ShapeName(spec.shape))},
                           {"reps", reps},
                           {"runs", runs},
                           {"objectives_identical", identical}};
  std::cout << report.dump(2) << '\n';
  return kOk;
}

int RunRender(const std::string& input, const std::string& solution_path,
              const std::string& svg_path) {
  std::vector<boxcover::Point> points = boxcover::ReadPointsFile(input);
  auto [spec, sol] = boxcover::ReadSolutionFile(solution_path);
  for (auto id : sol.outliers) {
    if (id < 0 || id >= static_cast<boxcover::PointId>(points.size())) {
      throw boxcover::ParseError(0, "outlier id " + std::to_string(id) +
                                        " out of range");
    }
  }
  std::string svg = boxcover::RenderSvg(points, sol);
  if (svg_path.empty() || svg_path == "-") {
    std::cout << svg;
  } else if (!WriteFile(svg_path, svg)) {
    std::cerr << "cannot write " << svg_path << '\n';
    return kBadInput;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (p,k) box covering for p <= 3"};
  app.require_subcommand(1);

  ProblemFlags solve_flags;
  std::string solve_input, solve_format = "json", solve_svg;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("input", solve_input, "points file")->required();
  solve_flags.Add(solve);
  solve->add_option("--out", solve_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--svg", solve_svg, "also write an SVG figure");

  std::string gen_kind, gen_out;
  std::vector<std::string> gen_args;
  uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("gen", "generate a points file");
  gen->add_option("kind", gen_kind, "uniform | clusters | diagonal | shared")
      ->required();
  gen->add_option("args", gen_args, "generator arguments");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->allow_extras(false);

  ProblemFlags verify_flags;
  std::string verify_input;
  bool verify_fault = false;
  CLI::App* verify =
      app.add_subcommand("verify", "compare the solver with the brute-force oracle");
  verify->add_option("input", verify_input, "points file")->required();
  verify_flags.Add(verify);
  verify->add_flag("--inject-fault", verify_fault)->group("");

  ProblemFlags bench_flags;
  int bench_n = 100000, bench_reps = 1;
  uint64_t bench_seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "time preprocessing and solving");
  bench_flags.Add(bench);
  bench->add_option("--n", bench_n, "number of uniform points")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", bench_seed, "PRNG seed");
  bench->add_option("--reps", bench_reps, "repetitions")->check(CLI::PositiveNumber);

  std::string render_input, render_solution, render_svg;
  CLI::App* render = app.add_subcommand("render", "draw a solution as SVG");
  render->add_option("input", render_input, "points file")->required();
  render->add_option("solution", render_solution, "solution JSON")->required();
  render->add_option("--svg", render_svg, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  }

  try {
    if (*solve) return RunSolve(solve_input, solve_flags, solve_format, solve_svg);
    if (*gen) return RunGen(gen_kind, gen_args, gen_seed, gen_out);
    if (*verify) return RunVerify(verify_input, verify_flags, verify_fault);
    if (*bench) return RunBench(bench_flags, bench_n, bench_seed, bench_reps);
    if (*render) return RunRender(render_input, render_solution, render_svg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  } catch (const boxcover::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadFlags;
}
