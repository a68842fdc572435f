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

#ifndef DPSYNTH_ROLLOUT_H_
#define DPSYNTH_ROLLOUT_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dpsynth/game.h"
#include "dpsynth/markov_chain.h"
#include "dpsynth/product.h"

namespace dpsynth {

// Seeded 64-bit Mersenne Twister (std::mt19937_64, whose output sequence is
// fixed by the standard). Uniform draws use the top 53 bits, so results are
// identical on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF draw from a distribution.
std::size_t SampleSuccessor(const Distribution& dist, Rng& rng);

// States x_0 = start, ..., x_{length-1} of a run of the chain.
std::vector<std::size_t> SampleTrajectory(const MarkovChain& chain,
                                          std::size_t start, std::size_t length,
                                          Rng& rng);

struct SatisfactionEstimate {
  double estimate = 0.0;
  double half_width = 0.0;  // 95% normal approximation
  std::size_t successes = 0;
  std::size_t rollouts = 0;
};

// Fraction of runs of `horizon` steps that enter `accepting` and remain in it
// until the horizon.
SatisfactionEstimate EstimateSatisfaction(const MarkovChain& chain,
                                          std::size_t start,
                                          const StateMask& accepting,
                                          std::size_t rollouts,
                                          std::size_t horizon,
                                          std::uint64_t seed);

}  // namespace dpsynth

#endif  // DPSYNTH_ROLLOUT_H_
