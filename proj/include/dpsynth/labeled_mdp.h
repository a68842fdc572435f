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

#ifndef DPSYNTH_LABELED_MDP_H_
#define DPSYNTH_LABELED_MDP_H_

#include <cstddef>
#include <vector>

#include "dpsynth/end_components.h"
#include "dpsynth/game.h"
#include "dpsynth/markov_chain.h"
#include "dpsynth/policy.h"
#include "dpsynth/product.h"

namespace dpsynth {

// Labeled MDP with per-state enabled action sets. Terminal states are the
// absorbing goal states of the reachability objective.
class LabeledMdp {
 public:
  // `rows` is indexed by state * num_actions + action; rows of disabled
  // actions are ignored and may be empty. Throws ModelError when a state has
  // no enabled action or an enabled row is not a distribution.
  LabeledMdp(std::size_t num_actions, std::vector<Distribution> rows,
             std::vector<std::vector<std::size_t>> enabled,
             std::vector<std::size_t> labels, StateMask terminal);

  std::size_t num_states() const { return labels_.size(); }
  std::size_t num_actions() const { return num_actions_; }
  const Distribution& transition(std::size_t x, std::size_t a) const {
    return rows_[x * num_actions_ + a];
  }
  // Sorted, non-empty.
  const std::vector<std::size_t>& enabled(std::size_t x) const {
    return enabled_[x];
  }
  bool IsEnabled(std::size_t x, std::size_t a) const;
  std::size_t label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  bool terminal(std::size_t x) const { return terminal_[x]; }
  const StateMask& terminal_mask() const { return terminal_; }

 private:
  std::size_t num_actions_;
  std::vector<Distribution> rows_;
  std::vector<std::vector<std::size_t>> enabled_;
  std::vector<std::size_t> labels_;
  StateMask terminal_;
};

// Eliminates the adversary with a fixed stationary policy tau:
// P(x'|x,d) = sum_a tau(a|x) T(x'|x,d,a). Enabled actions are supp mu(x) and
// terminal states are the members of E.
LabeledMdp RestrictToPolicy(const ProductGame& product, const MixedPolicy& mu,
                            const MixedPolicy& tau, const AcceptingSet& e);

struct SubMdp {
  LabeledMdp mdp;
  std::vector<std::size_t> original;  // sub index -> original index
};

// Sub-MDP over the states reachable from `initial` under enabled actions,
// renumbered in increasing original order.
SubMdp ReachableSubMdp(const LabeledMdp& mdp, std::size_t initial);

// Chain obtained by resolving the MDP's choices with `policy`. The policy
// must put mass only on enabled actions.
MarkovChain ChainFromMdp(const LabeledMdp& mdp, const MixedPolicy& policy);

}  // namespace dpsynth

#endif  // DPSYNTH_LABELED_MDP_H_
