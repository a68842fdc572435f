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

#ifndef DPSYNTH_POLICY_H_
#define DPSYNTH_POLICY_H_

#include <cstddef>
#include <span>
#include <vector>

namespace dpsynth {

// Stationary randomized policy: one probability vector over the acting
// player's actions per state.
class MixedPolicy {
 public:
  MixedPolicy() = default;
  // Throws ModelError if any state's vector has the wrong length, a negative
  // entry, or does not sum to one within kProbabilityTolerance.
  MixedPolicy(std::vector<std::vector<double>> probabilities,
              std::size_t num_actions);

  static MixedPolicy Deterministic(const std::vector<std::size_t>& actions,
                                   std::size_t num_actions);
  static MixedPolicy Uniform(std::size_t num_states, std::size_t num_actions);

  std::size_t num_states() const { return probabilities_.size(); }
  std::size_t num_actions() const { return num_actions_; }

  double operator()(std::size_t state, std::size_t action) const {
    return probabilities_[state][action];
  }
  std::span<const double> at(std::size_t state) const {
    return probabilities_[state];
  }
  // Actions with positive probability, increasing.
  std::vector<std::size_t> Support(std::size_t state) const;

  // Total variation between the action distributions at two states:
  // half the L1 distance over the shared action index.
  double TotalVariation(std::size_t s, std::size_t t) const;

  // Policy over a subset of states, in the order given.
  MixedPolicy Restrict(std::span<const std::size_t> states) const;

  friend bool operator==(const MixedPolicy&, const MixedPolicy&) = default;

 private:
  std::vector<std::vector<double>> probabilities_;
  std::size_t num_actions_ = 0;
};

}  // namespace dpsynth

#endif  // DPSYNTH_POLICY_H_
