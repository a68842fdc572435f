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

#ifndef DPSYNTH_GRIDWORLD_H_
#define DPSYNTH_GRIDWORLD_H_

#include <cstddef>
#include <istream>
#include <utility>
#include <vector>

#include "dpsynth/game.h"

namespace dpsynth {

using Cell = std::pair<std::size_t, std::size_t>;  // (x, y)

struct GridSpec {
  std::size_t width = 0;   // M
  std::size_t height = 0;  // N
  std::vector<Cell> targets;
  std::vector<Cell> obstacles;
  double p_nominal = 0.8;
  double p_attack = 0.6;

  // Throws ParameterError unless 0 < p_attack <= p_nominal <= 1, both sizes
  // are positive and targets and obstacles are disjoint cells of the grid.
  void Validate() const;
  std::size_t Index(std::size_t x, std::size_t y) const { return x + width * y; }
};

// Defender actions, in index order: R (x + 1), L (x - 1), U (y + 1),
// D (y - 1). Adversary actions: A (attack), NA.
inline constexpr const char* kGridDefActions[] = {"R", "L", "U", "D"};
inline constexpr const char* kGridAdvActions[] = {"A", "NA"};

// Grid game over cells i = x + M y with propositions free, tar, obs. A move
// that would leave the grid keeps the agent in place with probability 1.
// Otherwise the intended neighbor receives p (p_nominal under NA, p_attack
// under A) and 1 - p is split evenly over the cell itself and its other
// in-grid neighbors.
StochasticGame BuildGrid(const GridSpec& spec);

// Reads `grid M N`, `target x y`, `obstacle x y`, `p_nominal v`, `p_attack v`
// lines; '#' starts a comment. Throws ParseError with the line number.
GridSpec ParseGridSpec(std::istream& in);

}  // namespace dpsynth

#endif  // DPSYNTH_GRIDWORLD_H_
