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

#ifndef DPSYNTH_SRC_KANTOROVICH_INTERNAL_H_
#define DPSYNTH_SRC_KANTOROVICH_INTERNAL_H_

#include <cstddef>
#include <vector>

#include "dpsynth/game.h"
#include "dpsynth/privacy.h"

namespace dpsynth::internal {

struct KantorovichResult {
  double value = 0.0;
  // States whose distances the optimum depends on, sorted.
  std::vector<std::size_t> active;
};

// One-sided skewed Kantorovich program. If no distance between two active
// states changes, neither does the value: the reduced program is identical
// and its old extension stays feasible when distances only grow.
// Facts about a distance table shared by every program solved against it.
// For an active state s let
//   excess(s) = max over w, u of (d(w,s) - d(w,u)) / alpha - d(u,s).
// If excess(s) <= (alpha - 1) x_s for every active s at a reduced optimum x,
// its cheapest extension violates no constraint, so the reduced program is
// already exact.
struct KantorovichContext {
  std::vector<double> excess;
  // For every state, the other states within distance < 1 of it; only those
  // can receive positive extension values.
  std::vector<std::vector<std::size_t>> near;
};

KantorovichContext MakeKantorovichContext(const DistanceTable& d,
                                          double alpha);

KantorovichResult SolveKantorovich(const Distribution& omega,
                                   const Distribution& omega_prime,
                                   const DistanceTable& d, double alpha,
                                   const KantorovichContext* context = nullptr);

}  // namespace dpsynth::internal

#endif  // DPSYNTH_SRC_KANTOROVICH_INTERNAL_H_
