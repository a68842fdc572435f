// Copyright 2026 The dpsynth Authors.
//
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

#include "dpsynth/gridworld.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "dpsynth/error.h"

namespace dpsynth {
namespace {

constexpr int kDx[] = {1, -1, 0, 0};
constexpr int kDy[] = {0, 0, 1, -1};

bool Inside(const GridSpec& g, long x, long y) {
  return x >= 0 && y >= 0 && x < static_cast<long>(g.width) &&
         y < static_cast<long>(g.height);
}

}  // namespace

void GridSpec::Validate() const {
  if (width == 0 || height == 0) {
    throw ParameterError("grid dimensions must be positive");
  }
  if (!(p_attack > 0.0 && p_attack <= p_nominal && p_nominal <= 1.0)) {
    throw ParameterError("need 0 < p_attack <= p_nominal <= 1");
  }
  for (const Cell& c : targets) {
    if (c.first >= width || c.second >= height) {
      throw ParameterError("target outside the grid");
    }
    if (std::find(obstacles.begin(), obstacles.end(), c) != obstacles.end()) {
      throw ParameterError("cell (" + std::to_string(c.first) + ", " +
                           std::to_string(c.second) +
                           ") is both a target and an obstacle");
    }
  }
  for (const Cell& c : obstacles) {
    if (c.first >= width || c.second >= height) {
      throw ParameterError("obstacle outside the grid");
    }
  }
}

StochasticGame BuildGrid(const GridSpec& spec) {
  spec.Validate();
  const std::size_t n = spec.width * spec.height;
  std::vector<std::size_t> labels(n, 0);
  for (const Cell& c : spec.targets) labels[spec.Index(c.first, c.second)] = 1;
  for (const Cell& c : spec.obstacles) {
    labels[spec.Index(c.first, c.second)] = 2;
  }
  const double p_of[] = {spec.p_attack, spec.p_nominal};

  std::vector<Distribution> rows;
  rows.reserve(n * 4 * 2);
  for (std::size_t i = 0; i < n; ++i) {
    const long x = static_cast<long>(i % spec.width);
    const long y = static_cast<long>(i / spec.width);
    std::vector<std::size_t> neighbors;
    for (int k = 0; k < 4; ++k) {
      if (Inside(spec, x + kDx[k], y + kDy[k])) {
        neighbors.push_back(spec.Index(x + kDx[k], y + kDy[k]));
      }
    }
    for (int d = 0; d < 4; ++d) {
      for (int a = 0; a < 2; ++a) {
        if (!Inside(spec, x + kDx[d], y + kDy[d])) {
          rows.push_back(PointMass(i));
          continue;
        }
        const std::size_t target = spec.Index(x + kDx[d], y + kDy[d]);
        const double p = p_of[a];
        const double share = (1.0 - p) / static_cast<double>(neighbors.size());
        std::vector<Successor> entries{{target, p}};
        if (share > 0.0) {
          entries.push_back({i, share});
          for (std::size_t j : neighbors) {
            if (j != target) entries.push_back({j, share});
          }
        }
        rows.push_back(MakeDistribution(std::move(entries), n, "grid row"));
      }
    }
  }
  return StochasticGame({"R", "L", "U", "D"}, {"A", "NA"},
                        {"free", "tar", "obs"}, std::move(labels),
                        std::move(rows));
}

GridSpec ParseGridSpec(std::istream& in) {
  GridSpec spec;
  bool have_grid = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError(what, line_no, 0);
    };
    auto read_size = [&]() {
      long long v;
      if (!(words >> v) || v < 0) fail("expected a non-negative integer");
      return static_cast<std::size_t>(v);
    };
    if (key == "grid") {
      spec.width = read_size();
      spec.height = read_size();
      have_grid = true;
    } else if (key == "target" || key == "obstacle") {
      std::size_t x = read_size();
      std::size_t y = read_size();
      (key == "target" ? spec.targets : spec.obstacles).push_back({x, y});
    } else if (key == "p_nominal" || key == "p_attack") {
      double v;
      if (!(words >> v)) fail("expected a probability");
      (key == "p_nominal" ? spec.p_nominal : spec.p_attack) = v;
    } else {
      fail("unknown keyword '" + key + "'");
    }
    std::string extra;
    if (words >> extra) fail("unexpected token '" + extra + "'");
  }
  if (!have_grid) throw ParseError("missing 'grid M N' line", line_no, 0);
  try {
    spec.Validate();
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), 0, 0);
  }
  return spec;
}

}  // namespace dpsynth
