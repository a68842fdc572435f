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

#include "dpsynth/rollout.h"

#include <cmath>

#include "dpsynth/error.h"

namespace dpsynth {

std::size_t SampleSuccessor(const Distribution& dist, Rng& rng) {
  double u = rng.Uniform();
  for (const Successor& e : dist) {
    if (u < e.prob) return e.state;
    u -= e.prob;
  }
  return dist.back().state;
}

std::vector<std::size_t> SampleTrajectory(const MarkovChain& chain,
                                          std::size_t start, std::size_t length,
                                          Rng& rng) {
  if (length == 0) throw ParameterError("trajectory length must be positive");
  std::vector<std::size_t> path{start};
  while (path.size() < length) {
    path.push_back(SampleSuccessor(chain.row(path.back()), rng));
  }
  return path;
}

SatisfactionEstimate EstimateSatisfaction(const MarkovChain& chain,
                                          std::size_t start,
                                          const StateMask& accepting,
                                          std::size_t rollouts,
                                          std::size_t horizon,
                                          std::uint64_t seed) {
  if (rollouts == 0) throw ParameterError("need at least one rollout");
  if (accepting.size() != chain.num_states()) {
    throw ModelError("accepting mask does not match the chain");
  }
  Rng rng(seed);
  SatisfactionEstimate out;
  out.rollouts = rollouts;
  for (std::size_t r = 0; r < rollouts; ++r) {
    std::size_t x = start;
    bool entered = accepting[x];
    bool stayed = true;
    for (std::size_t step = 0; step < horizon; ++step) {
      x = SampleSuccessor(chain.row(x), rng);
      if (accepting[x]) {
        entered = true;
      } else if (entered) {
        stayed = false;
      }
    }
    if (entered && stayed) ++out.successes;
  }
  const double p = static_cast<double>(out.successes) / rollouts;
  out.estimate = p;
  out.half_width = 1.96 * std::sqrt(p * (1.0 - p) / rollouts);
  return out;
}

}  // namespace dpsynth
