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

#include "dpsynth/policy.h"

#include <cmath>
#include <string>

#include "dpsynth/error.h"
#include "dpsynth/game.h"

namespace dpsynth {

MixedPolicy::MixedPolicy(std::vector<std::vector<double>> probabilities,
                         std::size_t num_actions)
    : probabilities_(std::move(probabilities)), num_actions_(num_actions) {
  for (std::size_t s = 0; s < probabilities_.size(); ++s) {
    const auto& row = probabilities_[s];
    if (row.size() != num_actions_) {
      throw ModelError("policy at state " + std::to_string(s) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(num_actions_));
    }
    double total = 0.0;
    for (double p : row) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw ModelError("policy at state " + std::to_string(s) +
                         " has a negative or non-finite entry");
      }
      total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      throw ModelError("policy at state " + std::to_string(s) +
                       " does not sum to one");
    }
  }
}

MixedPolicy MixedPolicy::Deterministic(const std::vector<std::size_t>& actions,
                                       std::size_t num_actions) {
  std::vector<std::vector<double>> p(actions.size(),
                                     std::vector<double>(num_actions, 0.0));
  for (std::size_t s = 0; s < actions.size(); ++s) {
    if (actions[s] >= num_actions) {
      throw ModelError("policy at state " + std::to_string(s) +
                       " selects an undefined action");
    }
    p[s][actions[s]] = 1.0;
  }
  return MixedPolicy(std::move(p), num_actions);
}

MixedPolicy MixedPolicy::Uniform(std::size_t num_states,
                                 std::size_t num_actions) {
  return MixedPolicy(
      std::vector<std::vector<double>>(
          num_states, std::vector<double>(num_actions, 1.0 / num_actions)),
      num_actions);
}

std::vector<std::size_t> MixedPolicy::Support(std::size_t state) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < num_actions_; ++a) {
    if (probabilities_[state][a] > 0.0) out.push_back(a);
  }
  return out;
}

double MixedPolicy::TotalVariation(std::size_t s, std::size_t t) const {
  double sum = 0.0;
  for (std::size_t a = 0; a < num_actions_; ++a) {
    sum += std::abs(probabilities_[s][a] - probabilities_[t][a]);
  }
  return 0.5 * sum;
}

MixedPolicy MixedPolicy::Restrict(std::span<const std::size_t> states) const {
  std::vector<std::vector<double>> p;
  p.reserve(states.size());
  for (std::size_t s : states) p.push_back(probabilities_.at(s));
  MixedPolicy out;
  out.probabilities_ = std::move(p);
  out.num_actions_ = num_actions_;
  return out;
}

}  // namespace dpsynth
