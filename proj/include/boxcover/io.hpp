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

// Points files, solution JSON and SVG rendering.
//
// Points file: one "x y" pair per line, whitespace separated. '#' starts a
// comment, blank lines are ignored, ids follow line order.
//
// Solution JSON:
//   {"p": 2, "k": 0, "shape": "square", "objective": 4.0, "covered": 4,
//    "boxes": [{"xmin": 0, "ymin": 0, "xmax": 1, "ymax": 1}, ...],
//    "outliers": [ids]}
// nlohmann::json prints doubles with the shortest representation that reads
// back to the same value.
//
// This header needs nlohmann/json; the solver headers do not.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "boxcover/core.hpp"
#include "json.hpp"

namespace boxcover {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace io_detail {

inline bool ParseDouble(std::string_view tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

inline std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Shortest round-trip decimal form.
inline std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace io_detail

inline std::vector<Point> ParsePoints(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (size_t hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    auto toks = io_detail::Tokens(body);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw ParseError(lineno, "expected two numbers, got " +
                                   std::to_string(toks.size()) + " fields");
    }
    double x, y;
    if (!io_detail::ParseDouble(toks[0], x)) {
      throw ParseError(lineno, "bad number '" + std::string(toks[0]) + "'");
    }
    if (!io_detail::ParseDouble(toks[1], y)) {
      throw ParseError(lineno, "bad number '" + std::string(toks[1]) + "'");
    }
    out.push_back({x, y, static_cast<PointId>(out.size())});
  }
  return out;
}

inline std::vector<Point> ReadPointsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return ParsePoints(in);
}

inline void WritePoints(std::ostream& out, std::span<const Point> points) {
  for (const Point& p : points) {
    out << io_detail::FormatDouble(p.x) << ' ' << io_detail::FormatDouble(p.y)
        << '\n';
  }
}

inline nlohmann::json SolutionToJson(const ProblemSpec& spec,
                                     const CoverSolution& sol) {
  nlohmann::json boxes = nlohmann::json::array();
  for (const AxisBox& b : sol.boxes) {
    boxes.push_back(
        {{"xmin", b.xmin}, {"ymin", b.ymin}, {"xmax", b.xmax}, {"ymax", b.ymax}});
  }
  return {{"p", spec.p},
          {"k", spec.k},
          {"shape", std::string(ShapeName(spec.shape))},
          {"objective", sol.objective},
          {"covered", sol.covered},
          {"boxes", std::move(boxes)},
          {"outliers", sol.outliers}};
}

// Throws ParseError on a malformed document.
inline std::pair<ProblemSpec, CoverSolution> SolutionFromJson(
    const nlohmann::json& j) {
  try {
    ProblemSpec spec;
    spec.p = j.at("p").get<int>();
    spec.k = j.at("k").get<int>();
    auto shape = ParseShape(j.at("shape").get<std::string>());
    if (!shape) throw ParseError(0, "unknown shape");
    spec.shape = *shape;
    CoverSolution sol;
    sol.objective = j.at("objective").get<double>();
    sol.covered = j.value("covered", 0);
    for (const auto& b : j.at("boxes")) {
      sol.boxes.push_back({b.at("xmin").get<double>(), b.at("ymin").get<double>(),
                           b.at("xmax").get<double>(), b.at("ymax").get<double>(),
                           spec.shape});
    }
    sol.outliers = j.at("outliers").get<std::vector<PointId>>();
    return {spec, sol};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad solution document: ") + e.what());
  }
}

inline std::pair<ProblemSpec, CoverSolution> ReadSolutionFile(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad JSON in ") + path + ": " + e.what());
  }
  return SolutionFromJson(j);
}

// SVG 1.1 figure: one circle per point (outliers hollow), one outlined rect
// per box. The y-axis is flipped so the picture matches the plane.
inline std::string RenderSvg(std::span<const Point> points,
                             const CoverSolution& sol) {
  double xmin = 0, ymin = 0, xmax = 1, ymax = 1;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
      return;
    }
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const Point& p : points) grow(p.x, p.y);
  for (const AxisBox& b : sol.boxes) {
    grow(b.xmin, b.ymin);
    grow(b.xmax, b.ymax);
  }
  double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double size = 800.0, margin = 20.0;
  const double scale = (size - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - xmin) * scale; };
  auto sy = [&](double y) { return size - margin - (y - ymin) * scale; };
  auto f = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
  };

  std::unordered_set<PointId> outliers(sol.outliers.begin(), sol.outliers.end());
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << f(size) << "\" height=\"" << f(size) << "\" viewBox=\"0 0 " << f(size)
      << ' ' << f(size) << "\">\n";
  for (const AxisBox& b : sol.boxes) {
    out << "  <rect x=\"" << f(sx(b.xmin)) << "\" y=\"" << f(sy(b.ymax))
        << "\" width=\"" << f(b.Width() * scale) << "\" height=\""
        << f(b.Height() * scale)
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  }
  for (const Point& p : points) {
    bool hollow = outliers.count(p.id) > 0;
    out << "  <circle cx=\"" << f(sx(p.x)) << "\" cy=\"" << f(sy(p.y))
        << "\" r=\"4\" "
        << (hollow ? "fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\""
                   : "fill=\"#222222\"")
        << "/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace boxcover
